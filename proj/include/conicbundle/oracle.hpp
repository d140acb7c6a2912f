#pragma once

#include <vector>

#include "conicbundle/polynomial.hpp"
#include "conicbundle/rational_function.hpp"

namespace conicbundle {

// Floating-point cross-checks for the exact routines. Results never feed the
// symbolic path; they only confirm it.
enum class OracleExecution { serial, parallel };

struct NumericGrid {
    int samples = 0;
    double bound = 0.0;  // every sample lies in [-bound, bound]
};

struct NumericRootCount {
    int count = 0;
    NumericGrid grid;
};

// Sign changes of square-free p over a geometric grid covering the root
// bound interval. Requires samples >= 2*degree + 2.
NumericRootCount numeric_root_count(const Polynomial& p, int samples,
                                    OracleExecution exec = OracleExecution::parallel);

struct ComponentCount {
    int spheres = 0;
    int tori = 0;
    bool operator==(const ComponentCount&) const = default;
};

// Components of {x^2 + y^2 = g(z)} over the circle R u {inf}, counted from
// the sign of g on a uniform angular grid: each maximal positive arc carries
// a sphere, an all-positive circle carries a torus. Requires samples >= 256
// and g valid per validate_g. A grid point whose sign is numerically
// ambiguous is re-sampled once with an offset; persistent ambiguity raises
// OracleInconclusive.
ComponentCount numeric_component_count(const RationalFunction& g, int samples,
                                       OracleExecution exec = OracleExecution::parallel);

inline constexpr int oracle_default_samples = 4096;
inline constexpr int oracle_max_samples = 1 << 20;

// Doubling-refinement agreement loops: true when the numeric count matches
// `expected` at some grid size up to max_samples. Inconclusive grids count
// as disagreement and trigger the next refinement.
bool root_count_agrees(const Polynomial& p, int expected,
                       int initial_samples = oracle_default_samples,
                       int max_samples = oracle_max_samples);
bool component_count_agrees(const RationalFunction& g, const ComponentCount& expected,
                            int initial_samples = oracle_default_samples,
                            int max_samples = oracle_max_samples);

}  // namespace conicbundle
