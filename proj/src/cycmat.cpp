#include "badlocus/cycmat.hpp"

namespace badlocus {

CycMat CycMat::identity(size_t n) {
  CycMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
  return m;
}

CycMat operator*(const CycMat& x, const CycMat& y) {
  if (x.cols != y.rows) throw FieldError("matrix shape mismatch");
  CycMat r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const CycNum& xv = x.at(i, k);
      if (xv.is_zero()) continue;
      for (size_t j = 0; j < y.cols; ++j) {
        const CycNum& yv = y.at(k, j);
        if (yv.is_zero()) continue;
        r.at(i, j) += xv * yv;
      }
    }
  return r;
}

CycMat operator+(const CycMat& x, const CycMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw FieldError("matrix shape mismatch");
  CycMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

CycMat operator-(const CycMat& x, const CycMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw FieldError("matrix shape mismatch");
  CycMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

CycMat CycMat::scaled(const CycNum& c) const {
  CycMat r = *this;
  for (auto& x : r.a) x *= c;
  return r;
}

CycMat CycMat::transpose() const {
  CycMat r(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool CycMat::operator==(const CycMat& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == o.a[i])) return false;
  return true;
}

std::optional<CycNum> CycMat::as_scalar() const {
  if (rows != cols || rows == 0) return std::nullopt;
  CycNum c = at(0, 0);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (i == j) {
        if (!(at(i, j) == c)) return std::nullopt;
      } else if (!at(i, j).is_zero()) {
        return std::nullopt;
      }
    }
  return c;
}

std::vector<size_t> rref(CycMat& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t piv = row;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) continue;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
    CycNum inv = m.at(row, col).inverse();
    for (size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      CycNum f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(CycMat m) { return rref(m).size(); }

CycNum det(CycMat m) {
  if (m.rows != m.cols) throw FieldError("det of non-square matrix");
  CycNum d(1);
  for (size_t col = 0, row = 0; col < m.cols; ++col, ++row) {
    size_t piv = row;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) return CycNum(0);
    if (piv != row) {
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
      d = -d;
    }
    d *= m.at(row, col);
    CycNum inv = m.at(row, col).inverse();
    for (size_t i = row + 1; i < m.rows; ++i) {
      if (m.at(i, col).is_zero()) continue;
      CycNum f = m.at(i, col) * inv;
      for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
  }
  return d;
}

CycMat inverse(CycMat m) {
  if (m.rows != m.cols) throw FieldError("inverse of non-square matrix");
  size_t n = m.rows;
  CycMat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = CycNum(1);
  }
  auto piv = rref(aug);
  if (piv.size() != n || piv.back() >= n)
    throw FieldError("matrix not invertible");
  CycMat r(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

std::vector<std::vector<CycNum>> kernel_basis(CycMat m) {
  size_t ncols = m.cols;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<CycNum>> basis;
  for (size_t freec = 0; freec < ncols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<CycNum> v(ncols, CycNum(0));
    v[freec] = CycNum(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(r, freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

CycMat mat_pow(const CycMat& m, long e) {
  if (e < 0) return mat_pow(inverse(m), -e);
  CycMat acc = CycMat::identity(m.rows);
  CycMat base = m;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace badlocus
