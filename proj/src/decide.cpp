#include "conicbundle/decide.hpp"

#include <optional>
#include <utility>

#include "conicbundle/errors.hpp"

namespace conicbundle {

namespace {

int mod2(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace

long long MapDescriptor::degree_of(int component_id) const {
    auto it = degree_by_component.find(component_id);
    return it == degree_by_component.end() ? 0 : it->second;
}

LatticeElement to_lattice_element(const SurfaceState& state, const MapDescriptor& f) {
    CohomologyLattice lattice = lattice_of(state);
    LatticeElement x = LatticeElement::zero(lattice);
    for (const auto& [id, degree] : f.degree_by_component) {
        if (int i = lattice.free_index_of(id); i >= 0) {
            x.free_coords[static_cast<std::size_t>(i)] = degree;
        } else if (int j = lattice.torsion_index_of(id); j >= 0) {
            x.torsion_coords[static_cast<std::size_t>(j)] = mod2(degree);
        } else {
            throw InvalidInput("map assigns a degree to component " + std::to_string(id) +
                               ", which the surface does not have");
        }
    }
    return x;
}

Decision decide_approx_sphere(const SurfaceState& state, const MapDescriptor& f) {
    CohomologyLattice lattice = lattice_of(state);
    LatticeElement x = to_lattice_element(state, f);
    Decision d;
    d.approximable = is_member(lattice, algebraic_generators(state), x);
    if (d.approximable) return d;

    for (const auto& c : state.components) {
        if (c.topology.kind == Topology::Kind::torus && f.degree_of(c.id) != 0) {
            d.reasons.push_back("torus component " + std::to_string(c.id) + " carries degree " +
                                std::to_string(f.degree_of(c.id)) +
                                "; regular maps have degree 0 on torus components");
        }
    }
    std::vector<std::pair<int, int>> klein_bits;  // (id, mod-2 degree) over dominating Kleins
    for (const auto& c : state.components) {
        if (c.topology.is_klein_bottle() && c.dominates_circle) {
            klein_bits.emplace_back(c.id, mod2(f.degree_of(c.id)));
        }
    }
    for (std::size_t i = 0; i < klein_bits.size(); ++i) {
        for (std::size_t j = i + 1; j < klein_bits.size(); ++j) {
            if (klein_bits[i].second != klein_bits[j].second) {
                d.reasons.push_back(
                    "dominating Klein components " + std::to_string(klein_bits[i].first) + " and " +
                    std::to_string(klein_bits[j].first) + " carry different mod-2 degrees (" +
                    std::to_string(klein_bits[i].second) + " vs " +
                    std::to_string(klein_bits[j].second) +
                    "); regular maps have equal mod-2 degree on all of them");
            }
        }
    }
    if (d.reasons.empty()) {
        d.reasons.push_back("pullback class " + to_string(lattice, x) +
                            " lies outside the algebraic subgroup");
    }
    return d;
}

bool degree_criterion(const SurfaceState& state, const MapDescriptor& f) {
    std::optional<int> common_bit;
    for (const auto& c : state.components) {
        if (c.topology.kind == Topology::Kind::torus && f.degree_of(c.id) != 0) return false;
        if (c.topology.is_klein_bottle() && c.dominates_circle) {
            int bit = mod2(f.degree_of(c.id));
            if (!common_bit) {
                common_bit = bit;
            } else if (*common_bit != bit) {
                return false;
            }
        }
    }
    return true;
}

ClosedSurface ClosedSurface::orientable_of_genus(int g) {
    if (g < 0) throw InvalidInput("orientable genus must be >= 0");
    return {true, g};
}

ClosedSurface ClosedSurface::with_crosscaps(int q) {
    if (q < 1) throw InvalidInput("crosscap count must be >= 1");
    return {false, q};
}

std::string ClosedSurface::name() const {
    if (orientable) {
        if (genus == 0) return "sphere";
        if (genus == 1) return "torus";
        return "orientable surface of genus " + std::to_string(genus);
    }
    if (genus == 1) return "projective plane";
    if (genus == 2) return "Klein bottle";
    return "nonorientable surface with " + std::to_string(genus) + " crosscaps";
}

ClosedSurface closed_surface_of(const Topology& t) {
    switch (t.kind) {
        case Topology::Kind::sphere: return ClosedSurface::sphere();
        case Topology::Kind::torus: return ClosedSurface::torus();
        case Topology::Kind::klein: return ClosedSurface::klein_bottle();
        case Topology::Kind::cross_surface: return ClosedSurface::with_crosscaps(t.crosscaps);
    }
    throw InvalidInput("unknown topology kind");
}

RationalTargetDecision decide_approx_rational_target(const ClosedSurface& v,
                                                     const RationalTargetDescriptor& w) {
    RationalTargetDecision d;
    if (v.is_torus() && w.topology.is_sphere()) {
        d.density = Density::closure_null_homotopic;
        d.reason =
            "source is a torus and target is a sphere: the closure of the regular maps is "
            "exactly the null homotopic maps";
    } else {
        d.density = Density::dense;
        d.reason = "regular maps are dense among smooth maps from a " + v.name() + " to a " +
                   w.topology.name();
    }
    return d;
}

CRationalSurfaceKind CRationalSurfaceKind::torus_model() {
    return {Kind::torus_model, {ClosedSurface::torus()}};
}

CRationalSurfaceKind CRationalSurfaceKind::maximal_del_pezzo_degree_2() {
    return {Kind::maximal_del_pezzo_degree_2,
            std::vector<ClosedSurface>(4, ClosedSurface::sphere())};
}

CRationalSurfaceKind CRationalSurfaceKind::other(std::vector<ClosedSurface> components) {
    return {Kind::other, std::move(components)};
}

GroupInvariants gamma_c_rational(const CRationalSurfaceKind& kind) {
    switch (kind.kind) {
        case CRationalSurfaceKind::Kind::torus_model:
            return GroupInvariants::free_of_rank(1);
        case CRationalSurfaceKind::Kind::maximal_del_pezzo_degree_2:
            if (kind.components != std::vector<ClosedSurface>(4, ClosedSurface::sphere())) {
                throw InvalidInput(
                    "a maximal degree-2 Del Pezzo surface has four sphere components");
            }
            return GroupInvariants::z_mod_2_to(0, 1);
        case CRationalSurfaceKind::Kind::other:
            return {};
    }
    throw InvalidInput("unknown surface kind");
}

bool canonical_class_vanishes(const SurfaceState& state) {
    for (const auto& c : state.components) {
        if (!c.topology.orientable() && c.topology.crosscap_count() % 2 != 0) return false;
    }
    return true;
}

}  // namespace conicbundle
