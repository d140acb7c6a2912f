#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conicbundle/rational_function.hpp"

namespace conicbundle {

// Base curve of the ruling. An explicit base is P^1 with its one real circle;
// an abstract base carries only genus and the number of real circles.
struct BaseCurve {
    enum class Kind { explicit_p1, abstract_curve };
    Kind kind = Kind::abstract_curve;
    int genus = 0;
    int real_circle_count = 0;

    static BaseCurve p1() { return {Kind::explicit_p1, 0, 1}; }
    static BaseCurve abstract(int genus, int circles) {
        return {Kind::abstract_curve, genus, circles};
    }
    bool operator==(const BaseCurve&) const = default;
};

// Zero data of g on one circle of the base. The zero count is even; a sign is
// carried exactly when there is no zero on the circle.
struct CircleData {
    int zeros = 0;
    std::optional<int> sign_if_no_zero;  // +1 or -1

    bool operator==(const CircleData&) const = default;
};

struct Transformation {
    enum class Kind { elm_real, elm_conj_pair, blowup_real, blowup_conj_pair };
    Kind kind = Kind::elm_real;
    std::optional<int> target_component;  // required for elm_real / blowup_real

    bool is_elm() const { return kind == Kind::elm_real || kind == Kind::elm_conj_pair; }
    bool is_blowup() const { return !is_elm(); }
    bool operator==(const Transformation&) const = default;
};

std::string to_string(Transformation::Kind kind);

struct ConicBundleSpec {
    BaseCurve base;
    std::optional<RationalFunction> explicit_g;  // present iff base is explicit P^1
    std::vector<CircleData> circles;             // abstract data, one entry per circle
    std::vector<Transformation> transformations;

    bool operator==(const ConicBundleSpec&) const = default;
};

// Diffeomorphism type of a closed connected surface appearing as a real
// component: sphere, torus, Klein bottle (the conic-bundle kind dominating a
// base circle), or a connected sum of q crosscaps (q = 1 gives RP^2; q = 2 a
// Klein bottle that does not dominate).
struct Topology {
    enum class Kind { sphere, torus, klein, cross_surface };
    Kind kind = Kind::sphere;
    int crosscaps = 0;  // only for cross_surface, >= 1

    static Topology sphere() { return {Kind::sphere, 0}; }
    static Topology torus() { return {Kind::torus, 0}; }
    static Topology klein() { return {Kind::klein, 0}; }
    static Topology cross_surface(int q) { return {Kind::cross_surface, q}; }

    bool orientable() const { return kind == Kind::sphere || kind == Kind::torus; }
    bool is_klein_bottle() const {
        return kind == Kind::klein || (kind == Kind::cross_surface && crosscaps == 2);
    }
    int crosscap_count() const;          // 0 for orientable
    int euler_characteristic() const;
    std::string name() const;
    bool operator==(const Topology&) const = default;
};

struct RealComponent {
    int id = 0;
    Topology topology;
    bool dominates_circle = false;  // image under the ruling is a whole circle of the base
    int real_elm_count = 0;
    bool has_real_exceptional = false;  // a real (-1)-curve meets this component
    int circle_index = 0;               // circle of the base the component lies over
};

struct SurfaceState {
    std::vector<RealComponent> components;
    BaseCurve base;
    bool minimal = true;     // no blow-ups applied yet
    bool c_rational = true;  // base genus 0
    // Components that dominate a base circle as Klein bottles at the end of
    // the elm stage; frozen at the first blow-up. Their classes generate the
    // section's restriction to the nonorientable part.
    std::vector<int> section_klein_ids;
    std::vector<std::string> transform_log;
    std::vector<std::string> warnings;

    const RealComponent* find(int id) const;
    bool empty_real_locus() const { return components.empty(); }
};

struct Census {
    int spheres = 0;
    int tori = 0;
    int klein_bottles = 0;             // k: Klein-bottle topology, dominating or not
    int dominating_klein_bottles = 0;  // k'
    std::vector<int> orientable_ids;
    std::vector<int> nonorientable_ids;
};

// Topology of the minimal model from the pre-transformation part of the spec:
// m spheres per circle carrying 2m zeros, one torus per zero-free circle where
// g is positive, nothing where g is negative.
SurfaceState build_minimal_surface(const ConicBundleSpec& spec);
SurfaceState build_minimal_surface(const ConicBundleSpec& spec, const Rational& isolation_width);

SurfaceState apply_elm(const SurfaceState& state, const Transformation& t);
SurfaceState apply_blowup(const SurfaceState& state, const Transformation& t);

// build_minimal_surface followed by the whole transformation list, enforcing
// the elms-before-blow-ups pipeline order.
SurfaceState apply_all(const ConicBundleSpec& spec);
SurfaceState apply_all(const ConicBundleSpec& spec, const Rational& isolation_width);

Census component_census(const SurfaceState& state);

}  // namespace conicbundle
