#pragma once

// Dense matrices over cyclotomic fields, with exact Gaussian elimination.

#include <vector>

#include "badlocus/cyclo.hpp"

namespace badlocus {

struct CycMat {
  size_t rows = 0, cols = 0;
  std::vector<CycNum> a;  // row-major

  CycMat() = default;
  CycMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  CycNum& at(size_t i, size_t j) { return a[i * cols + j]; }
  const CycNum& at(size_t i, size_t j) const { return a[i * cols + j]; }

  static CycMat identity(size_t n);

  friend CycMat operator*(const CycMat& x, const CycMat& y);
  friend CycMat operator+(const CycMat& x, const CycMat& y);
  friend CycMat operator-(const CycMat& x, const CycMat& y);
  CycMat scaled(const CycNum& c) const;
  CycMat transpose() const;
  bool operator==(const CycMat& o) const;

  // Scalar c with *this == c * I, if any.
  std::optional<CycNum> as_scalar() const;
};

CycNum det(CycMat m);
CycMat inverse(CycMat m);
size_t rank(CycMat m);

// Basis of the right kernel {v : m v = 0}, as column vectors.
std::vector<std::vector<CycNum>> kernel_basis(CycMat m);

// Row-reduce in place; returns pivot column indices.
std::vector<size_t> rref(CycMat& m);

CycMat mat_pow(const CycMat& m, long e);

}  // namespace badlocus
