#pragma once

// Linear algebra over F_p, integer Smith normal form, and the symplectic
// geometry of hyperplane pairs in (F_p)^{2g}.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "badlocus/cyclo.hpp"  // for FieldError

namespace badlocus {

struct FpMat {
  long p = 2;
  size_t rows = 0, cols = 0;
  std::vector<long> a;  // row-major, entries in [0, p)

  FpMat() = default;
  FpMat(long p_, size_t r, size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}
  long& at(size_t i, size_t j) { return a[i * cols + j]; }
  long at(size_t i, size_t j) const { return a[i * cols + j]; }

  static FpMat identity(long p, size_t n);
  friend FpMat operator*(const FpMat& x, const FpMat& y);
  bool operator==(const FpMat& o) const {
    return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
  }
};

long fp_inv(long a, long p);

// Row reduce in place, returning pivot columns.
std::vector<size_t> fp_rref(FpMat& m);
size_t fp_rank(FpMat m);
// Right kernel basis (column vectors of length m.cols).
std::vector<std::vector<long>> fp_kernel(const FpMat& m);

// A subspace of (F_p)^n stored as an RREF basis (rows).
struct FpSubspace {
  long p = 2;
  size_t ambient = 0;
  FpMat basis;  // rref rows, basis.rows = dim

  size_t dim() const { return basis.rows; }
  bool contains(const std::vector<long>& v) const;
  bool operator==(const FpSubspace& o) const;

  static FpSubspace span(long p, size_t ambient,
                         const std::vector<std::vector<long>>& gens);
};

FpSubspace intersect(const FpSubspace& a, const FpSubspace& b);

// All hyperplanes (codimension-1 subspaces) of (F_p)^r, one per normalized
// covector; count (p^r - 1)/(p - 1).
std::vector<FpSubspace> hyperplanes(long p, size_t r);

// ---------------------------------------------------------------------------
// Integer matrices and Smith normal form.
// ---------------------------------------------------------------------------

struct IntMat {
  size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMat() = default;
  IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  mpz_class& at(size_t i, size_t j) { return a[i * cols + j]; }
  const mpz_class& at(size_t i, size_t j) const { return a[i * cols + j]; }
  static IntMat identity(size_t n);
  friend IntMat operator*(const IntMat& x, const IntMat& y);
};

// U * A * V = D with U, V unimodular and D diagonal with d_i | d_{i+1}.
struct SnfResult {
  IntMat U, V, D;
  std::vector<mpz_class> invariants;  // nonzero diagonal entries
};
SnfResult smith_normal_form(IntMat A);

// Basis (columns) of {x : A x = 0} over Z.
std::vector<std::vector<mpz_class>> int_kernel(const IntMat& A);

// Invariant factors > 1 of Z^n / column-lattice(A) (requires the quotient to
// be finite, i.e. rank A = n); sorted ascending.
std::vector<mpz_class> quotient_invariants(const IntMat& A);

// ---------------------------------------------------------------------------
// Symplectic geometry over F_p.
// ---------------------------------------------------------------------------

// (F_p)^{2g} with the standard form: omega(x_i, y_i) = 1 on the basis
// x_1..x_g, y_1..y_g (coordinates ordered x_1, y_1, x_2, y_2, ...).
struct SymplecticSpace {
  long p = 2;
  long g = 1;

  size_t dim() const { return 2 * (size_t)g; }
  long form(const std::vector<long>& u, const std::vector<long>& v) const;
  FpMat gram() const;
};

// Dimension of the radical of omega restricted to E intersect E' (0 or 2 for
// distinct hyperplanes).
long pair_degeneracy(const SymplecticSpace& sp, const FpSubspace& E,
                     const FpSubspace& E2);

// Closure of the transvection generators x -> x + omega(x, v) v; returns the
// group order (throws if cap exceeded).
size_t symplectic_group_order(const SymplecticSpace& sp, size_t cap);

// Number of orbits of Sp(2g, F_p) on ordered pairs of distinct hyperplanes.
size_t sp_orbit_count_on_hyperplane_pairs(const SymplecticSpace& sp);

// For distinct hyperplanes E, E': a hyperplane E0 with pair_degeneracy(E, E0)
// = pair_degeneracy(E', E0) = the opposite type of pair_degeneracy(E, E').
FpSubspace find_E0(const SymplecticSpace& sp, const FpSubspace& E,
                   const FpSubspace& E2);

}  // namespace badlocus
