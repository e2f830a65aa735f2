#pragma once

// Elements of PGL(p, C) with exact cyclotomic entries.
//
// A ProjMat is stored as the unique lift whose first nonzero entry in
// row-major order equals 1; two projective classes are equal iff these
// canonical lifts agree entrywise.  All group-theoretic computations stay in
// PGL: no p-th roots of determinants are ever extracted.

#include <optional>
#include <vector>

#include "badlocus/cycmat.hpp"

namespace badlocus {

class ProjMat {
 public:
  ProjMat() = default;
  // Canonicalizes (throws FieldError on the zero matrix or non-square input).
  explicit ProjMat(CycMat m);

  const CycMat& lift() const { return m_; }
  size_t dim() const { return m_.rows; }

  ProjMat operator*(const ProjMat& o) const;
  ProjMat inv() const;
  ProjMat pow(long e) const;
  bool operator==(const ProjMat& o) const { return m_ == o.m_; }
  bool operator!=(const ProjMat& o) const { return !(m_ == o.m_); }
  bool is_identity() const;

  size_t hash() const;

  // Monomial structure: true if every row and column has exactly one nonzero
  // entry.
  bool is_monomial() const;
  // For a monomial matrix supported on a single cyclic layer (entry (i+k, i)
  // nonzero for all i), the layer k; nullopt otherwise.
  std::optional<long> cyclic_layer() const;
  bool is_diagonal() const { return cyclic_layer() == std::optional<long>(0); }

  // Smallest e >= 1 with pow(e) trivial, up to cap; nullopt if none found.
  std::optional<long> projective_order(long cap = 1000) const;

 private:
  CycMat m_;
  mutable std::optional<size_t> hash_;
};

struct ProjMatHash {
  size_t operator()(const ProjMat& m) const { return m.hash(); }
};

// Standard generators.  Throughout, xi = zeta_p and indices run mod p.
//
// mat_D_xi(p): diagonal with entries xi^i for odd p; diag(i, -i) for p = 2
// (canonical form diag(1, -1)).
ProjMat mat_D_xi(long p);
// mat_Mc(p): the permutation matrix of the p-cycle i -> i+1 for odd p; the
// antidiagonal [[0, i], [i, 0]] for p = 2 (canonical form [[0,1],[1,0]]).
ProjMat mat_Mc(long p);
// Permutation matrix of sigma in S_p given as an image table.
ProjMat mat_perm(long p, const std::vector<long>& sigma);
// Vandermonde matrix (xi^{ij})_{i,j}.
ProjMat vandermonde(long p);
// Diagonal with entries xi^{i(i+1)/2}.
ProjMat mat_S(long p);
// Diagonal with entries zeta_m^{e_i}.
ProjMat mat_torsion_diag(long p, long m, const std::vector<long>& e);

// k in Z/p with A B A^{-1} B^{-1} = zeta_p^k I, computed on the canonical
// lifts (scalars cancel); nullopt if the commutator is not such a scalar.
std::optional<long> scalar_commutator(const ProjMat& A, const ProjMat& B);

}  // namespace badlocus
