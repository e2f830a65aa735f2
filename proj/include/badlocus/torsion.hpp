#pragma once

// Finite-order diagonal classes: elements of the projective diagonal torus of
// PGL(p, C) killed by m, written additively as exponent vectors in (Z/m)^p
// modulo constant vectors.

#include <vector>

#include "badlocus/proj_matrix.hpp"

namespace badlocus {

struct TorsionDiag {
  long p = 2, m = 1;
  // Length p, entries in [0, m), first coordinate 0 (canonical representative
  // modulo constants).
  std::vector<long> e;

  TorsionDiag() = default;
  TorsionDiag(long p_, long m_, std::vector<long> raw);

  static TorsionDiag zero(long p, long m);
  // Exponents (0, m/p, 2m/p, ...): the diagonal root-of-unity class D(xi) at
  // level m; requires p | m.
  static TorsionDiag d_xi(long p, long m);

  bool is_zero() const;
  TorsionDiag operator+(const TorsionDiag& o) const;
  TorsionDiag operator-() const;
  TorsionDiag operator-(const TorsionDiag& o) const { return *this + (-o); }
  TorsionDiag scaled(long c) const;
  // Action of conjugation by the standard p-cycle, k times: coordinate i of
  // the result is coordinate i - k of the input.
  TorsionDiag shifted(long k = 1) const;

  bool operator==(const TorsionDiag& o) const {
    return p == o.p && m == o.m && e == o.e;
  }
  bool operator!=(const TorsionDiag& o) const { return !(*this == o); }
  bool operator<(const TorsionDiag& o) const { return e < o.e; }

  // Diagonal matrix class with entries zeta_m^{e_i}.
  ProjMat to_projmat() const;
};

}  // namespace badlocus
