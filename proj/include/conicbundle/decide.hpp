#pragma once

#include <map>
#include <string>
#include <vector>

#include "conicbundle/lattice.hpp"
#include "conicbundle/surface.hpp"

namespace conicbundle {

// Degree data of a smooth map from the real locus to the sphere, keyed by
// component id: an integer degree on each orientable component, a mod-2
// degree on each nonorientable one (values are reduced mod 2 there).
// Components without an entry map with degree 0.
struct MapDescriptor {
    std::map<int, long long> degree_by_component;

    long long degree_of(int component_id) const;
    bool operator==(const MapDescriptor&) const = default;
};

// Pullback of the target's generator class under the map: integer degrees
// land in the free slots, mod-2 degrees in the torsion slots.
LatticeElement to_lattice_element(const SurfaceState& state, const MapDescriptor& f);

struct Decision {
    bool approximable = false;
    std::vector<std::string> reasons;  // populated when rejecting
};

// Whether the map can be approximated by regular maps to the sphere, decided
// by membership of its pullback class in the algebraic subgroup. On
// rejection the reasons name every torus component with nonzero degree and
// every pair of dominating Klein components with unequal mod-2 degrees.
Decision decide_approx_sphere(const SurfaceState& state, const MapDescriptor& f);

// The same question read directly off the degrees: every torus degree is
// zero and the mod-2 degrees of the dominating Klein components are pairwise
// equal. Kept separate from the membership route so the two can be checked
// against each other.
bool degree_criterion(const SurfaceState& state, const MapDescriptor& f);

// Closed connected surface named by orientability and handle/crosscap count.
struct ClosedSurface {
    bool orientable = true;
    int genus = 0;  // handles when orientable, crosscaps (>= 1) when not

    static ClosedSurface sphere() { return {true, 0}; }
    static ClosedSurface torus() { return {true, 1}; }
    static ClosedSurface klein_bottle() { return {false, 2}; }
    static ClosedSurface orientable_of_genus(int g);
    static ClosedSurface with_crosscaps(int q);

    bool is_sphere() const { return orientable && genus == 0; }
    bool is_torus() const { return orientable && genus == 1; }
    std::string name() const;
    bool operator==(const ClosedSurface&) const = default;
};

ClosedSurface closed_surface_of(const Topology& t);

// Connected real rational target surface W.
struct RationalTargetDescriptor {
    ClosedSurface topology;
    bool operator==(const RationalTargetDescriptor&) const = default;
};

enum class Density {
    dense,                    // regular maps are dense among smooth maps V -> W
    closure_null_homotopic,   // their closure is exactly the null homotopic maps
};

struct RationalTargetDecision {
    Density density = Density::dense;
    std::string reason;
};

// Density of regular maps from a connected component V of a C-ruled real
// locus into a rational target W: dense except when V is a torus and W is a
// sphere.
RationalTargetDecision decide_approx_rational_target(const ClosedSurface& v,
                                                     const RationalTargetDescriptor& w);

// Classification key for a C-rational real surface. Topology alone cannot
// separate a maximal degree-2 Del Pezzo (four spheres, Gamma = Z/2) from a
// conic bundle whose real locus is four spheres (Gamma trivial), so the
// caller declares which model the surface is.
struct CRationalSurfaceKind {
    enum class Kind { torus_model, maximal_del_pezzo_degree_2, other };
    Kind kind = Kind::other;
    std::vector<ClosedSurface> components;

    static CRationalSurfaceKind torus_model();
    // components must be four spheres
    static CRationalSurfaceKind maximal_del_pezzo_degree_2();
    static CRationalSurfaceKind other(std::vector<ClosedSurface> components);
};

// Gamma of a C-rational surface by catalogue lookup: Z for the torus model,
// Z/2 for the maximal degree-2 Del Pezzo, trivial otherwise.
GroupInvariants gamma_c_rational(const CRationalSurfaceKind& kind);

// Whether the restriction of the canonical class to the real locus vanishes:
// true exactly when every nonorientable component has even Euler
// characteristic, i.e. an even crosscap count.
bool canonical_class_vanishes(const SurfaceState& state);

}  // namespace conicbundle
