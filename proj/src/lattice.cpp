#include "conicbundle/lattice.hpp"

#include <algorithm>
#include <utility>

#include "conicbundle/errors.hpp"

namespace conicbundle {

int CohomologyLattice::free_index_of(int component_id) const {
    for (std::size_t i = 0; i < free_slots.size(); ++i) {
        if (free_slots[i] == component_id) return static_cast<int>(i);
    }
    return -1;
}

int CohomologyLattice::torsion_index_of(int component_id) const {
    for (std::size_t i = 0; i < torsion_slots.size(); ++i) {
        if (torsion_slots[i] == component_id) return static_cast<int>(i);
    }
    return -1;
}

LatticeElement LatticeElement::zero(const CohomologyLattice& lattice) {
    LatticeElement e;
    e.free_coords.assign(static_cast<std::size_t>(lattice.free_rank()), 0);
    e.torsion_coords.assign(static_cast<std::size_t>(lattice.torsion_rank()), 0);
    return e;
}

bool LatticeElement::is_zero() const {
    return std::all_of(free_coords.begin(), free_coords.end(), [](long long c) { return c == 0; }) &&
           std::all_of(torsion_coords.begin(), torsion_coords.end(), [](int c) { return c == 0; });
}

LatticeElement unit_class(const CohomologyLattice& lattice, int component_id) {
    LatticeElement e = LatticeElement::zero(lattice);
    if (int i = lattice.free_index_of(component_id); i >= 0) {
        e.free_coords[static_cast<std::size_t>(i)] = 1;
        return e;
    }
    if (int i = lattice.torsion_index_of(component_id); i >= 0) {
        e.torsion_coords[static_cast<std::size_t>(i)] = 1;
        return e;
    }
    throw InvalidInput("component " + std::to_string(component_id) + " has no lattice slot");
}

std::string to_string(const CohomologyLattice& lattice, const LatticeElement& e) {
    std::string out;
    auto append = [&out](long long coeff, int id) {
        if (coeff == 0) return;
        if (!out.empty()) out += " + ";
        if (coeff != 1) out += std::to_string(coeff) + "*";
        out += "eta[" + std::to_string(id) + "]";
    };
    for (std::size_t i = 0; i < e.free_coords.size(); ++i) {
        append(e.free_coords[i], lattice.free_slots[i]);
    }
    for (std::size_t i = 0; i < e.torsion_coords.size(); ++i) {
        append(e.torsion_coords[i], lattice.torsion_slots[i]);
    }
    return out.empty() ? "0" : out;
}

CohomologyLattice lattice_of(const SurfaceState& state) {
    CohomologyLattice lattice;
    for (const auto& c : state.components) {
        if (c.topology.orientable()) {
            lattice.free_slots.push_back(c.id);
        } else {
            lattice.torsion_slots.push_back(c.id);
        }
    }
    std::sort(lattice.free_slots.begin(), lattice.free_slots.end());
    std::sort(lattice.torsion_slots.begin(), lattice.torsion_slots.end());
    return lattice;
}

namespace {

// Ids whose Klein classes sum to the section's restriction on the
// nonorientable part: the dominating Klein components at the end of the elm
// stage. For states still in the elm stage this is the current set.
std::vector<int> section_klein_ids_of(const SurfaceState& state) {
    if (!state.minimal) return state.section_klein_ids;
    std::vector<int> ids;
    for (const auto& c : state.components) {
        if (c.topology.kind == Topology::Kind::klein && c.dominates_circle) ids.push_back(c.id);
    }
    return ids;
}

}  // namespace

std::vector<LatticeElement> algebraic_generators(const SurfaceState& state) {
    CohomologyLattice lattice = lattice_of(state);
    std::vector<LatticeElement> gens;

    for (const auto& c : state.components) {
        if (c.topology.kind == Topology::Kind::sphere) {
            gens.push_back(unit_class(lattice, c.id));
        }
    }

    std::vector<int> klein_ids = section_klein_ids_of(state);
    if (!klein_ids.empty()) {
        LatticeElement sum = LatticeElement::zero(lattice);
        for (int id : klein_ids) {
            int i = lattice.torsion_index_of(id);
            if (i < 0) throw InvalidInput("section Klein id lost its torsion slot");
            sum.torsion_coords[static_cast<std::size_t>(i)] = 1;
        }
        gens.push_back(std::move(sum));
    }

    for (const auto& c : state.components) {
        if (c.has_real_exceptional) {
            gens.push_back(unit_class(lattice, c.id));
        }
    }
    return gens;
}

NSRestrictionTable ns_restriction_table(const SurfaceState& state) {
    CohomologyLattice lattice = lattice_of(state);
    NSRestrictionTable table;

    table.rows.push_back({"f", LatticeElement::zero(lattice), "class of a fiber"});

    LatticeElement section = LatticeElement::zero(lattice);
    for (int id : section_klein_ids_of(state)) {
        int i = lattice.torsion_index_of(id);
        if (i >= 0) section.torsion_coords[static_cast<std::size_t>(i)] = 1;
    }
    table.rows.push_back({"h", std::move(section),
                          "class of a section; sphere coordinates only defined modulo the "
                          "spherical classes and set to 0"});

    for (const auto& c : state.components) {
        if (c.topology.kind != Topology::Kind::sphere) continue;
        for (int half = 1; half <= 2; ++half) {
            table.rows.push_back({"E_" + std::to_string(c.id) + "^" + std::to_string(half),
                                  unit_class(lattice, c.id),
                                  "singular-fiber line over sphere " + std::to_string(c.id)});
        }
    }

    table.rows.push_back({"K_X", LatticeElement::zero(lattice),
                          "canonical class r*f - 2h + sum E_j^c; the integer r stays symbolic "
                          "and never enters the restriction"});

    for (const auto& c : state.components) {
        if (c.has_real_exceptional) {
            table.rows.push_back({"exc_" + std::to_string(c.id), unit_class(lattice, c.id),
                                  "real exceptional curve on component " + std::to_string(c.id)});
        }
    }
    return table;
}

GroupInvariants GroupInvariants::z_mod_2_to(long long r, int torsion_copies) {
    GroupInvariants g;
    g.free_rank = r;
    g.torsion_factors.assign(static_cast<std::size_t>(std::max(torsion_copies, 0)), Integer(2));
    return g;
}

std::string GroupInvariants::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank == 1) {
        out = "Z";
    } else if (free_rank > 1) {
        out = "Z^" + std::to_string(free_rank);
    }
    std::size_t i = 0;
    while (i < torsion_factors.size()) {
        std::size_t j = i;
        while (j < torsion_factors.size() && torsion_factors[j] == torsion_factors[i]) ++j;
        std::string factor = "Z/" + conicbundle::to_string(torsion_factors[i]);
        if (!out.empty()) out += " x ";
        if (j - i == 1) {
            out += factor;
        } else {
            out += "(" + factor + ")^" + std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

namespace {

void check_dimensions(const CohomologyLattice& lattice, const LatticeElement& e,
                      const char* what) {
    if (static_cast<int>(e.free_coords.size()) != lattice.free_rank() ||
        static_cast<int>(e.torsion_coords.size()) != lattice.torsion_rank()) {
        throw InvalidInput(std::string(what) + ": lattice element dimension mismatch");
    }
}

}  // namespace

GroupInvariants quotient_group(const CohomologyLattice& lattice,
                               const std::vector<LatticeElement>& gens) {
    for (const auto& g : gens) check_dimensions(lattice, g, "quotient_group");
    int a = lattice.free_rank();
    int b = lattice.torsion_rank();
    int n = a + b;
    IntMatrix relations(b + static_cast<int>(gens.size()), n);
    for (int i = 0; i < b; ++i) relations(i, a + i) = 2;
    for (std::size_t r = 0; r < gens.size(); ++r) {
        for (int j = 0; j < a; ++j) {
            relations(b + static_cast<int>(r), j) =
                Integer(static_cast<long>(gens[r].free_coords[static_cast<std::size_t>(j)]));
        }
        for (int j = 0; j < b; ++j) {
            relations(b + static_cast<int>(r), a + j) =
                gens[r].torsion_coords[static_cast<std::size_t>(j)];
        }
    }
    SmithDecomposition snf = smith_normal_form(relations);
    std::vector<Integer> factors = snf.invariant_factors();
    GroupInvariants out;
    out.free_rank = n - static_cast<long long>(factors.size());
    for (auto& f : factors) {
        if (f > 1) out.torsion_factors.push_back(std::move(f));
    }
    return out;
}

MembershipSolver::MembershipSolver(CohomologyLattice lattice,
                                   const std::vector<LatticeElement>& gens)
    : lattice_(std::move(lattice)) {
    for (const auto& g : gens) check_dimensions(lattice_, g, "is_member");
    int a = lattice_.free_rank();
    int b = lattice_.torsion_rank();
    int n = a + b;
    generator_count_ = static_cast<int>(gens.size()) + b;
    // columns: the generators, then the 2-torsion relations
    IntMatrix m(n, generator_count_);
    for (std::size_t c = 0; c < gens.size(); ++c) {
        for (int i = 0; i < a; ++i) {
            m(i, static_cast<int>(c)) =
                Integer(static_cast<long>(gens[c].free_coords[static_cast<std::size_t>(i)]));
        }
        for (int i = 0; i < b; ++i) {
            m(a + i, static_cast<int>(c)) = gens[c].torsion_coords[static_cast<std::size_t>(i)];
        }
    }
    for (int i = 0; i < b; ++i) m(a + i, static_cast<int>(gens.size()) + i) = 2;
    snf_ = smith_normal_form(m);
}

bool MembershipSolver::contains(const LatticeElement& x) const {
    check_dimensions(lattice_, x, "is_member");
    int a = lattice_.free_rank();
    int b = lattice_.torsion_rank();
    int n = a + b;
    // solve M y = x: with U M V = D this is D z = U x, solvable over Z iff
    // each coordinate of U x is divisible by the matching diagonal entry
    std::vector<Integer> rhs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Integer acc(0);
        for (int j = 0; j < n; ++j) {
            const Integer& uij = snf_.left(i, j);
            if (uij == 0) continue;
            long long xj = j < a ? x.free_coords[static_cast<std::size_t>(j)]
                                 : static_cast<long long>(x.torsion_coords[static_cast<std::size_t>(j - a)]);
            if (xj != 0) acc += uij * Integer(static_cast<long>(xj));
        }
        rhs[static_cast<std::size_t>(i)] = std::move(acc);
    }
    for (int i = 0; i < n; ++i) {
        Integer d = i < std::min(n, generator_count_) ? snf_.diagonal(i, i) : Integer(0);
        const Integer& r = rhs[static_cast<std::size_t>(i)];
        if (d == 0) {
            if (r != 0) return false;
        } else if (r % d != 0) {
            return false;
        }
    }
    return true;
}

bool is_member(const CohomologyLattice& lattice, const std::vector<LatticeElement>& gens,
               const LatticeElement& x) {
    return MembershipSolver(lattice, gens).contains(x);
}

GroupInvariants gamma_closed_form(const SurfaceState& state) {
    Census census = component_census(state);
    int k = state.minimal ? census.klein_bottles : census.dominating_klein_bottles;
    return GroupInvariants::z_mod_2_to(census.tori, std::max(k - 1, 0));
}

GammaResult gamma(const SurfaceState& state) {
    GammaResult result;
    result.computed = quotient_group(lattice_of(state), algebraic_generators(state));
    result.predicted = gamma_closed_form(state);
    result.matches = result.computed == result.predicted;
    result.c_rational = state.c_rational;
    return result;
}

}  // namespace conicbundle
