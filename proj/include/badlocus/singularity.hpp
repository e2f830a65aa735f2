#pragma once

// Cyclic-quotient singularity detection for the character variety at a
// class with finite stabilizer: weight profiles of the Z/p (or (Z/p)^2)
// action on the cohomology tangent space, the fixed-codimension criterion,
// and the invariant-monomial minimal-generator count, which must agree.

#include <optional>
#include <utility>
#include <vector>

#include "badlocus/cocycle.hpp"

namespace badlocus {

struct WeightProfile {
  long p = 2;
  // multiplicities[k] = dimension of the weight-k eigenspace, k = 0..p-1.
  std::vector<long> multiplicities;

  long total() const;
};

// Codimension of the fixed subspace: sum of the nonzero-weight
// multiplicities.
long fixed_codim(const WeightProfile& w);

// Number of minimal generators of the monoid of invariant monomials
// (exponent vectors with weight sum divisible by p), enumerated up to total
// degree p.  Equals the Zariski cotangent dimension of the quotient at the
// origin.  Throws FieldError when total() exceeds the bound.
long invariant_min_generators(const WeightProfile& w, long bound = 12);

// The quotient origin is algebraically singular iff fixed_codim > 1;
// cross-checked against invariant_min_generators > total() on every call.
bool is_singular_origin(const WeightProfile& w, long bound = 12);

// Same minimal-generator count for a (Z/p)^2 action given by biweights,
// enumerating up to total degree p^2.
long invariant_min_generators_biweight(
    long p, const std::vector<std::pair<long, long>>& weights,
    long bound = 12);

enum class Verdict { Smooth, AlgebraicSingularity };

// Verdict for the character variety at the class of rho (images must give an
// irreducible subgroup).  Trivial stabilizer: Smooth.  Stabilizer of order p
// (monomial normal form required): the weight profile is assembled from the
// adjoint-block cohomology dimensions and fed to is_singular_origin.
// Stabilizer of order p^2 (image inside the standard abelian pair): biweight
// extension.  Throws FieldError for other stabilizer shapes.
Verdict singular_verdict(long p, const RepAssignment& rho);

struct Psl2zReport {
  long p = 2;
  std::vector<long> abelianization;  // invariant factors of the abelianized
                                     // modular group
  bool locus_empty = true;
  // Populated when the locus is the singleton class beta_p:
  std::optional<Verdict> verdict;
  std::vector<long> block_h1;  // dim H1 of the adjoint blocks d_1..d_{p-1}
};

// The singular locus of the PSL(p, C) character variety of the modular group
// <a, b | a^2, b^3>: empty for p > 3 (no surjection onto Z/p), a singleton
// for p in {2, 3} with the verdict computed from the block cohomology.
// Supports p <= 7.
Psl2zReport psl2z_report(long p);

}  // namespace badlocus
