#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A value is stored as a rational-coefficient polynomial in zeta_n of degree
// < phi(n), reduced modulo the n-th cyclotomic polynomial.  No floating point
// is used anywhere; every operation is exact.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace badlocus {

using Rat = mpq_class;

// Dense polynomial over Q, coefficients in ascending degree order.
using QPoly = std::vector<Rat>;

long phi(long n);

// n-th cyclotomic polynomial, integer coefficients, cached.
const QPoly& cyclotomic_poly(long n);

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CycNum {
 public:
  CycNum() : n_(1), c_(1, Rat(0)) {}
  explicit CycNum(long v) : n_(1), c_(1, Rat(v)) {}
  explicit CycNum(const Rat& v) : n_(1), c_(1, v) {}

  // zeta_n^k
  static CycNum zeta(long n, long k);
  // Construct from a coefficient vector of length phi(n) (basis 1, z, ..,
  // z^{phi(n)-1}).
  static CycNum from_coeffs(long n, QPoly c);

  long order() const { return n_; }
  const QPoly& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Value as a rational if the non-constant coordinates vanish.
  std::optional<Rat> to_rational() const;

  // Re-express in Q(zeta_m); m must be a multiple of order().
  CycNum lifted_to(long m) const;
  // Canonical form: smallest cyclotomic field containing the value.
  CycNum reduced() const;

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  // Multiplicative inverse via extended Euclid against the cyclotomic
  // polynomial; throws FieldError on zero.
  CycNum inverse() const;
  CycNum pow(long e) const;

  bool operator==(const CycNum& b) const;
  bool operator!=(const CycNum& b) const { return !(*this == b); }

  size_t hash() const;
  std::string str() const;

  // If the value is a root of unity, returns (N, k) with value = zeta_N^k,
  // N minimal and 0 <= k < N, gcd(k, N) = 1 unless k = 0.
  std::optional<std::pair<long, long>> as_root_of_unity() const;

  static std::pair<CycNum, CycNum> lift_to_common_order(const CycNum& a,
                                                        const CycNum& b);

 private:
  long n_;
  QPoly c_;
};

inline CycNum operator*(const Rat& a, const CycNum& b) { return CycNum(a) * b; }

// A p-th root of s inside Q(zeta_field_order), if one exists there.  Searches
// root-of-unity and rational multiples first, then falls back to a modular
// lift-and-reconstruct method.  field_order must be a multiple of s.order().
std::optional<CycNum> pth_root_in_field(const CycNum& s, long p,
                                        long field_order);

struct CycNumHash {
  size_t operator()(const CycNum& x) const { return x.hash(); }
};

}  // namespace badlocus
