// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every numeric bound is fixed here, not configurable.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "conicbundle/decide.hpp"
#include "conicbundle/lattice.hpp"
#include "conicbundle/oracle.hpp"
#include "conicbundle/smith.hpp"
#include "conicbundle/sturm.hpp"
#include "conicbundle/surface.hpp"
#include "random_specs.hpp"

using namespace conicbundle;
using conicbundle::testsupport::Engine;
using conicbundle::testsupport::append_random_blowups;
using conicbundle::testsupport::append_random_elms;
using conicbundle::testsupport::random_minimal_spec;
using conicbundle::testsupport::random_orientable_spec;
using conicbundle::testsupport::random_squarefree_polynomial;
using conicbundle::testsupport::random_valid_g;
using conicbundle::testsupport::uniform;

namespace {

bool g_all_ok = true;

void report(int number, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, detail.c_str());
    if (!ok) g_all_ok = false;
}

// ---- criterion 1: closed-form Gamma on minimal states, timed ----

void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    Engine rng(101);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        ConicBundleSpec spec = random_minimal_spec(rng);
        append_random_elms(rng, spec, 5);
        SurfaceState state = apply_all(spec);
        Census census = component_census(state);
        GroupInvariants expect = GroupInvariants::z_mod_2_to(
            census.tori, std::max(census.klein_bottles - 1, 0));
        GammaResult g = gamma(state);
        ok = g.matches && g.computed == expect;
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    double ms = std::chrono::duration<double, std::milli>(elapsed).count();
    bool in_time = ms < 1000.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "Gamma = Z^t x (Z/2)^max(k-1,0) on 100 random minimal states in %.1f ms%s", ms,
                  in_time ? "" : " (over the 1 s budget)");
    report(1, ok && in_time, buf);
}

// ---- criterion 2: closed-form Gamma with blow-ups ----

void criterion_2() {
    Engine rng(102);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        ConicBundleSpec spec = random_minimal_spec(rng);
        append_random_elms(rng, spec, 5);
        append_random_blowups(rng, spec, 4);
        SurfaceState state = apply_all(spec);
        Census census = component_census(state);
        GroupInvariants expect = GroupInvariants::z_mod_2_to(
            census.tori, std::max(census.dominating_klein_bottles - 1, 0));
        GammaResult g = gamma(state);
        ok = g.matches && g.computed == expect;
    }
    report(2, ok, "Gamma = Z^t x (Z/2)^max(k'-1,0) on 100 random states with up to 4 blow-ups");
}

// ---- criterion 3: membership decision == direct degree criterion ----

// Per-component build recipes realising every component type reachable
// through the pipeline: (zeros on its circle, sign when zero-free, elms,
// blow-ups). Orientable: sphere, torus. Nonorientable: dominating Klein,
// CS(1), CS(2), CS(3) from a torus, CS(3) from an elm'd torus.
struct Recipe {
    int zeros;
    int sign;  // used when zeros == 0
    int elms;
    int blowups;
    bool orientable;
};

constexpr Recipe kRecipes[] = {
    {2, 0, 0, 0, true},    // sphere
    {0, +1, 0, 0, true},   // torus
    {0, +1, 1, 0, false},  // Klein bottle dominating its circle
    {2, 0, 0, 1, false},   // sphere blown up once: CS(1)
    {2, 0, 0, 2, false},   // sphere blown up twice: CS(2)
    {0, +1, 0, 1, false},  // torus blown up: CS(3)
    {0, +1, 1, 1, false},  // torus -> Klein -> blown up: CS(3) in the frozen section set
};
constexpr int kRecipeCount = static_cast<int>(sizeof kRecipes / sizeof kRecipes[0]);
constexpr int kMaxComponents = 6;

SurfaceState realise(const std::vector<int>& class_of_component) {
    int n = static_cast<int>(class_of_component.size());
    ConicBundleSpec spec;
    spec.base = BaseCurve::abstract(std::max(1, n - 1), n);
    std::vector<Transformation> elms;
    std::vector<Transformation> blowups;
    for (int i = 0; i < n; ++i) {
        const Recipe& r = kRecipes[class_of_component[static_cast<std::size_t>(i)]];
        CircleData c;
        c.zeros = r.zeros;
        if (r.zeros == 0) c.sign_if_no_zero = r.sign;
        spec.circles.push_back(c);
        for (int e = 0; e < r.elms; ++e) elms.push_back({Transformation::Kind::elm_real, i});
        for (int b = 0; b < r.blowups; ++b)
            blowups.push_back({Transformation::Kind::blowup_real, i});
    }
    spec.transformations = std::move(elms);
    spec.transformations.insert(spec.transformations.end(), blowups.begin(), blowups.end());
    return apply_all(spec);
}

// Every degree assignment: free degrees in {-2..2}, torsion bits in {0,1}.
bool check_all_assignments(const SurfaceState& state, long long& assignments) {
    int n = static_cast<int>(state.components.size());
    std::vector<int> radix(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        radix[static_cast<std::size_t>(i)] = state.components[static_cast<std::size_t>(i)]
                                              .topology.orientable() ? 5 : 2;
    }
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    for (;;) {
        MapDescriptor f;
        for (int i = 0; i < n; ++i) {
            const auto& c = state.components[static_cast<std::size_t>(i)];
            int d = digit[static_cast<std::size_t>(i)];
            f.degree_by_component[c.id] = c.topology.orientable() ? d - 2 : d;
        }
        ++assignments;
        if (decide_approx_sphere(state, f).approximable != degree_criterion(state, f)) {
            return false;
        }
        int i = 0;
        while (i < n) {
            std::size_t s = static_cast<std::size_t>(i);
            if (++digit[s] < radix[s]) break;
            digit[s] = 0;
            ++i;
        }
        if (i == n) return true;
    }
}

void criterion_3() {
    long long states = 0;
    long long assignments = 0;
    bool ok = true;
    // multisets over the recipe classes, encoded as non-decreasing class lists
    std::vector<int> classes;
    auto recurse = [&](auto&& self, int next_class) -> void {
        if (!ok) return;
        ++states;
        ok = check_all_assignments(realise(classes), assignments);
        if (!ok || static_cast<int>(classes.size()) == kMaxComponents) return;
        for (int c = next_class; c < kRecipeCount && ok; ++c) {
            classes.push_back(c);
            self(self, c);
            classes.pop_back();
        }
    };
    recurse(recurse, 0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "membership == degree criterion on %lld states (<= %d components), "
                  "%lld degree assignments",
                  states, kMaxComponents, assignments);
    report(3, ok, buf);
}

// ---- criterion 4: exact topology vs numeric component count ----

void criterion_4() {
    bool ok = true;
    ConicBundleSpec worked;
    worked.base = BaseCurve::p1();
    worked.explicit_g = RationalFunction::from_int_coeffs({4, 0, -5, 0, 1}, {1, 0, 0, 0, 1});
    Census census = component_census(build_minimal_surface(worked));
    ok = census.spheres == 2 && census.tori == 0 &&
         component_count_agrees(*worked.explicit_g, ComponentCount{2, 0});

    Engine rng(104);
    for (int i = 0; i < 49 && ok; ++i) {
        RationalFunction g = random_valid_g(rng);
        ConicBundleSpec spec;
        spec.base = BaseCurve::p1();
        spec.explicit_g = g;
        Census c = component_census(build_minimal_surface(spec));
        ok = component_count_agrees(g, ComponentCount{c.spheres, c.tori});
    }
    report(4, ok,
           "build_minimal_surface == numeric_component_count on the worked example and 49 "
           "random valid g");
}

// ---- criterion 5: Sturm counts vs numeric root oracle and isolation ----

void criterion_5() {
    Engine rng(105);
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
        Polynomial p = random_squarefree_polynomial(rng);
        int count = count_real_roots(p);
        ok = count == static_cast<int>(isolate_real_roots(p).size()) &&
             root_count_agrees(p, count);
    }
    report(5, ok,
           "count_real_roots == isolating-interval count == numeric grid oracle on 200 "
           "square-free polynomials (degree <= 12)");
}

// ---- criterion 6: Smith decomposition postconditions ----

bool snf_postconditions(const IntMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    if (!(snf.left * a * snf.right == snf.diagonal)) return false;
    Integer du = snf.left.determinant();
    Integer dv = snf.right.determinant();
    if (!(du == 1 || du == -1) || !(dv == 1 || dv == -1)) return false;
    int n = std::min(snf.diagonal.rows(), snf.diagonal.cols());
    for (int i = 0; i < snf.diagonal.rows(); ++i) {
        for (int j = 0; j < snf.diagonal.cols(); ++j) {
            if (i != j && snf.diagonal(i, j) != 0) return false;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (snf.diagonal(i, i) < 0) return false;
    }
    for (int i = 0; i + 1 < n; ++i) {
        const Integer& d = snf.diagonal(i, i);
        const Integer& e = snf.diagonal(i + 1, i + 1);
        if (d == 0 ? e != 0 : e % d != 0) return false;
    }
    return true;
}

void criterion_6() {
    Engine rng(106);
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
        IntMatrix a(uniform(rng, 1, 8), uniform(rng, 1, 8));
        for (int r = 0; r < a.rows(); ++r) {
            for (int c = 0; c < a.cols(); ++c) {
                a(r, c) = static_cast<long>(uniform(rng, -20, 20));
            }
        }
        ok = snf_postconditions(a);
    }
    report(6, ok,
           "U*A*V = D, non-negative divisibility chain, unimodular U and V on 500 random "
           "matrices up to 8x8, entries in [-20, 20]");
}

// ---- criterion 7: orientable states give torsion-free Gamma of rank t ----

void criterion_7() {
    Engine rng(107);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
        SurfaceState state = apply_all(random_orientable_spec(rng));
        Census census = component_census(state);
        GammaResult g = gamma(state);
        ok = g.matches && g.computed.torsion_factors.empty() &&
             g.computed.free_rank == census.tori;
        for (const auto& c : state.components) ok = ok && c.topology.orientable();
    }
    report(7, ok, "torsion-free Gamma of rank t on 50 random orientable states");
}

// ---- criterion 8: catalogue values and the rational-target exception ----

void criterion_8() {
    bool ok = gamma_c_rational(CRationalSurfaceKind::torus_model()) ==
                  GroupInvariants::free_of_rank(1) &&
              gamma_c_rational(CRationalSurfaceKind::maximal_del_pezzo_degree_2()) ==
                  GroupInvariants::z_mod_2_to(0, 1) &&
              gamma_c_rational(CRationalSurfaceKind::other({})).is_trivial() &&
              gamma_c_rational(
                  CRationalSurfaceKind::other({ClosedSurface::sphere(), ClosedSurface::torus()}))
                  .is_trivial();

    std::vector<ClosedSurface> sources{
        ClosedSurface::sphere(),       ClosedSurface::torus(),
        ClosedSurface::klein_bottle(), ClosedSurface::orientable_of_genus(2),
        ClosedSurface::with_crosscaps(1), ClosedSurface::with_crosscaps(3)};
    std::vector<ClosedSurface> targets{ClosedSurface::sphere(), ClosedSurface::torus(),
                                       ClosedSurface::klein_bottle(),
                                       ClosedSurface::with_crosscaps(1)};
    for (const auto& v : sources) {
        for (const auto& w : targets) {
            bool exceptional = v.is_torus() && w.is_sphere();
            Density d = decide_approx_rational_target(v, {w}).density;
            ok = ok && d == (exceptional ? Density::closure_null_homotopic : Density::dense);
        }
    }
    report(8, ok,
           "catalogue Gamma (Z / Z2 / trivial) and density with the single (torus, sphere) "
           "exception over 24 source/target pairs");
}

// ---- criterion 9: elm parity on a torus ----

void criterion_9() {
    ConicBundleSpec spec;
    spec.base = BaseCurve::abstract(1, 1);
    spec.circles = {{0, 1}};
    SurfaceState state = build_minimal_surface(spec);
    bool ok = state.components.size() == 1 &&
              state.components[0].topology == Topology::torus();
    for (int n = 1; n <= 20 && ok; ++n) {
        state = apply_elm(state, {Transformation::Kind::elm_real, 0});
        bool is_klein = state.components[0].topology.is_klein_bottle();
        ok = is_klein == (n % 2 == 1) && state.components[0].real_elm_count == n;
    }
    report(9, ok, "n elms on a torus give a Klein bottle exactly for odd n, n <= 20");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (!g_all_ok) {
        std::printf("acceptance: FAILED\n");
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
