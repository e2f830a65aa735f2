#pragma once

// Constructors for irreducible representations of free and surface groups
// into PGL(p, C) with image in the monomial normal form, Euler invariants,
// intersection profiles of pseudo-components, and the counting formulas with
// their brute-force oracles.

#include <array>
#include <map>
#include <vector>

#include "badlocus/modp.hpp"
#include "badlocus/torsion.hpp"
#include "badlocus/words.hpp"

namespace badlocus {

// A shift-invariant subgroup of the level-m torsion diagonal classes, stored
// as the Hermite-form basis of its exponent lattice (which contains the
// level-m zero lattice).
struct DiagSubgroup {
  long p = 2, m = 1;
  IntMat lattice;  // column Hermite form, p x p, full rank
  std::vector<TorsionDiag> generators;  // small generating set mod the zero
                                        // lattice (empty for the trivial
                                        // subgroup)
  long order = 1;

  bool operator==(const DiagSubgroup& o) const {
    return p == o.p && m == o.m && lattice.a == o.lattice.a;
  }
  bool contains(const TorsionDiag& d) const;
};

// All shift-invariant subgroups of the level-m torsion diagonal classes,
// including the trivial and the full one, sorted by order.  Throws
// ClosureError when the class count m^{p-1} exceeds cap.
std::vector<DiagSubgroup> invariant_subgroups(long p, long m,
                                              size_t cap = 100000);

// The subgroup generated by the given classes and their shifts.
DiagSubgroup subgroup_generated_by(long p, long m,
                                   const std::vector<TorsionDiag>& gens);

// x_1 -> the standard p-cycle, x_j -> diag(t_j) for j = 2..l.
RepAssignment build_free_bad_rep(long p, long l,
                                 const std::vector<TorsionDiag>& data);

// a_1 -> the standard p-cycle, b_1 -> D(xi)^k, a_j -> diag(t_j),
// b_j -> diag(u_j) for j = 2..g; the surface relator is verified to map to
// the projective identity (its lift is a scalar).  Requires p | m.
RepAssignment build_surface_bad_rep(
    long p, long g, long k,
    const std::vector<std::pair<TorsionDiag, TorsionDiag>>& data);

// The Euler invariant of a surface-group representation: the product of
// commutators of the canonical lifts is xi^k times the identity (independent
// of the choice of lifts); returns k.  Throws FieldError if the product is
// not such a scalar.
long euler_invariant(const RepAssignment& rho);

// Closed-form counts.
long count_pseudo_components(long p, long r);        // (p^r - 1)/(p - 1)
long count_abelian_irreducible(long p, long r);      // (p^r-1)(p^{r-1}-1)/(p^2-1)
long intersection_count(long p);                     // p - 1
long components_through_abelian(long p);             // p + 1

// Brute-force count of abelian irreducible classes: surjective linear maps
// F_p^r -> F_p^2 up to post-composition with SL(2, F_p).  Also asserts the
// action is free.  Throws FieldError beyond small parameters.
long abelian_irreducible_oracle(long p, long r);

// For distinct hyperplanes E, E' of the genus-g symplectic space: how many
// conjugacy classes of abelian irreducible representations with layer kernel
// E intersect E' have each Euler class.  Computed via the commutator pairing
// in F_p.
std::map<long, long> intersection_euler_profile(const SymplecticSpace& sp,
                                                const FpSubspace& E,
                                                const FpSubspace& E2);

// Same profile, but building the actual matrix representations and calling
// euler_invariant on each class representative (small p only).
std::map<long, long> intersection_euler_profile_matrices(
    const SymplecticSpace& sp, const FpSubspace& E, const FpSubspace& E2);

// Trace coordinates of a pair of exact 2x2 determinant-1 matrices:
// (tr(A)^2, tr(B)^2, tr(AB)^2, tr(A)tr(B)tr(AB)); satisfies T^2 = XYZ.
std::array<CycNum, 4> vogt_coordinates(const CycMat& A, const CycMat& B);

}  // namespace badlocus
