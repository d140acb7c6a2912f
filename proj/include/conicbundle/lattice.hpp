#pragma once

#include <string>
#include <vector>

#include "conicbundle/smith.hpp"
#include "conicbundle/surface.hpp"

namespace conicbundle {

// H^2 of the real locus as a labelled lattice: one Z summand per orientable
// component, one Z/2 summand per nonorientable component.
struct CohomologyLattice {
    std::vector<int> free_slots;     // orientable component ids, ascending
    std::vector<int> torsion_slots;  // nonorientable component ids, ascending

    int free_rank() const { return static_cast<int>(free_slots.size()); }
    int torsion_rank() const { return static_cast<int>(torsion_slots.size()); }
    int dimension() const { return free_rank() + torsion_rank(); }
    // index into free_slots / torsion_slots, or -1
    int free_index_of(int component_id) const;
    int torsion_index_of(int component_id) const;
    bool operator==(const CohomologyLattice&) const = default;
};

struct LatticeElement {
    std::vector<long long> free_coords;
    std::vector<int> torsion_coords;  // bits

    static LatticeElement zero(const CohomologyLattice& lattice);
    bool is_zero() const;
    bool operator==(const LatticeElement&) const = default;
};

// eta_j placed in the slot of one component.
LatticeElement unit_class(const CohomologyLattice& lattice, int component_id);

std::string to_string(const CohomologyLattice& lattice, const LatticeElement& e);

CohomologyLattice lattice_of(const SurfaceState& state);

// Generators of the algebraic subgroup of the lattice: one class per sphere,
// the sum of the section's Klein classes, and one class per component meeting
// a real exceptional curve. Tori contribute nothing; neither do the fiber or
// the canonical class.
std::vector<LatticeElement> algebraic_generators(const SurfaceState& state);

// Restriction images of the Neron-Severi generators, kept for reporting.
struct NSRestrictionRow {
    std::string symbol;
    LatticeElement image;
    std::string note;
};
struct NSRestrictionTable {
    std::vector<NSRestrictionRow> rows;
};
NSRestrictionTable ns_restriction_table(const SurfaceState& state);

// Finitely generated abelian group in invariant-factor form.
struct GroupInvariants {
    long long free_rank = 0;
    std::vector<Integer> torsion_factors;  // each >= 2, each dividing the next

    bool is_trivial() const { return free_rank == 0 && torsion_factors.empty(); }
    std::string to_string() const;
    bool operator==(const GroupInvariants&) const = default;

    static GroupInvariants free_of_rank(long long r) { return {r, {}}; }
    static GroupInvariants z_mod_2_to(long long r, int torsion_copies);
};

// Invariant factors of (Z^a + (Z/2)^b) / <gens>.
GroupInvariants quotient_group(const CohomologyLattice& lattice,
                               const std::vector<LatticeElement>& gens);

// Membership of x in the subgroup of the lattice generated by gens, decided
// by a Smith decomposition of the generator matrix with the 2-torsion
// relations adjoined. Reusable across many queries against the same
// generating set.
class MembershipSolver {
public:
    MembershipSolver(CohomologyLattice lattice, const std::vector<LatticeElement>& gens);
    bool contains(const LatticeElement& x) const;
    const CohomologyLattice& lattice() const { return lattice_; }

private:
    CohomologyLattice lattice_;
    SmithDecomposition snf_;
    int generator_count_ = 0;
};

bool is_member(const CohomologyLattice& lattice, const std::vector<LatticeElement>& gens,
               const LatticeElement& x);

// Gamma of the state: the Smith-computed quotient, together with the
// closed-form value implied by the component census and a match flag.
struct GammaResult {
    GroupInvariants computed;
    GroupInvariants predicted;
    bool matches = false;
    bool c_rational = false;
};
GammaResult gamma(const SurfaceState& state);

// Closed form from census counts: free rank t, torsion (Z/2)^(max(k-1,0))
// with k read from the Klein count appropriate to the state (k for minimal
// states, k' after blow-ups).
GroupInvariants gamma_closed_form(const SurfaceState& state);

}  // namespace conicbundle
