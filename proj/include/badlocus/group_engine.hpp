#pragma once

// Finite subgroups of PGL(p, C): closure, irreducibility, twisted conjugator
// solving, centralizers, and reduction of monomial-conjugate groups to their
// standard form.

#include <unordered_set>
#include <vector>

#include "badlocus/proj_matrix.hpp"

namespace badlocus {

struct ClosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All products of the generators, BFS, capped.
std::vector<ProjMat> group_closure(const std::vector<ProjMat>& gens,
                                   size_t cap = 100000);

// Burnside criterion: the generated group acts irreducibly iff the linear
// span of its elements (equivalently, of all words in the generators) is the
// full matrix algebra.  Computed by saturating a span basis, no closure.
bool is_irreducible(const std::vector<ProjMat>& gens);

// All g in PGL(p, C) with g rho(x_i) g^{-1} = rho2(x_i) projectively, for
// irreducible rho, rho2 given by generator images.  Solves the lifted
// equations X A_i = omega_i B_i X over all p-th root of unity tuples omega,
// pruning branch by branch; by Schur each consistent tuple yields exactly one
// projective solution.
std::vector<ProjMat> conjugators_between(const std::vector<ProjMat>& rho,
                                         const std::vector<ProjMat>& rho2);

// Centralizer of the generated (irreducible) subgroup in PGL(p, C), as the
// group generated by all self-conjugators.
std::vector<ProjMat> centralizer(const std::vector<ProjMat>& gens);

enum class GroupKind {
  NotIrreducible,
  GoodIrreducible,        // trivial centralizer
  BadNonabelian,          // centralizer cyclic of order p
  BadAbelian,             // centralizer of order p^2 (image abelian)
};

struct GroupVerdict {
  GroupKind kind;
  std::vector<ProjMat> centralizer_elements;
};

GroupVerdict classify_subgroup(const std::vector<ProjMat>& gens);

// For an irreducible subgroup with nontrivial centralizer (hence conjugate to
// a monomial group normalized by the p-cycle), returns g such that
// g h g^{-1} is monomial with single-cycle support for every generator h, and
// some element of the conjugated group equals the standard p-cycle matrix.
ProjMat conjugate_to_normal_form(const std::vector<ProjMat>& gens);

}  // namespace badlocus
