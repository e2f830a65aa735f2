#include "badlocus/proj_matrix.hpp"

namespace badlocus {

ProjMat::ProjMat(CycMat m) {
  if (m.rows != m.cols || m.rows == 0) throw FieldError("not a square matrix");
  size_t first = m.a.size();
  for (size_t i = 0; i < m.a.size(); ++i)
    if (!m.a[i].is_zero()) {
      first = i;
      break;
    }
  if (first == m.a.size()) throw FieldError("zero matrix has no projective class");
  CycNum inv = m.a[first].inverse();
  for (auto& x : m.a) x *= inv;
  m_ = std::move(m);
}

ProjMat ProjMat::operator*(const ProjMat& o) const {
  return ProjMat(m_ * o.m_);
}

ProjMat ProjMat::inv() const { return ProjMat(inverse(m_)); }

ProjMat ProjMat::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  ProjMat acc{CycMat::identity(dim())};
  ProjMat base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool ProjMat::is_identity() const {
  return m_ == CycMat::identity(dim());
}

size_t ProjMat::hash() const {
  if (hash_) return *hash_;
  size_t h = dim();
  for (const auto& x : m_.a) h = h * 1000003u + x.hash();
  hash_ = h;
  return h;
}

bool ProjMat::is_monomial() const {
  size_t n = dim();
  for (size_t i = 0; i < n; ++i) {
    size_t cnt = 0;
    for (size_t j = 0; j < n; ++j)
      if (!m_.at(i, j).is_zero()) ++cnt;
    if (cnt != 1) return false;
  }
  for (size_t j = 0; j < n; ++j) {
    size_t cnt = 0;
    for (size_t i = 0; i < n; ++i)
      if (!m_.at(i, j).is_zero()) ++cnt;
    if (cnt != 1) return false;
  }
  return true;
}

std::optional<long> ProjMat::cyclic_layer() const {
  if (!is_monomial()) return std::nullopt;
  long n = (long)dim();
  long k = -1;
  for (long i = 0; i < n; ++i)
    if (!m_.at(i, 0).is_zero()) k = i;
  for (long j = 0; j < n; ++j) {
    long i = (j + k) % n;
    if (m_.at(i, j).is_zero()) return std::nullopt;
  }
  return k;
}

std::optional<long> ProjMat::projective_order(long cap) const {
  ProjMat acc = *this;
  for (long e = 1; e <= cap; ++e) {
    if (acc.is_identity()) return e;
    acc = acc * (*this);
  }
  return std::nullopt;
}

namespace {
void require_prime(long p) {
  if (p < 2) throw FieldError("dimension must be prime");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw FieldError("dimension must be prime");
}
}  // namespace

ProjMat mat_D_xi(long p) {
  require_prime(p);
  CycMat m(p, p);
  if (p == 2) {
    m.at(0, 0) = CycNum::zeta(4, 1);
    m.at(1, 1) = -CycNum::zeta(4, 1);
  } else {
    for (long i = 0; i < p; ++i) m.at(i, i) = CycNum::zeta(p, i);
  }
  return ProjMat(std::move(m));
}

ProjMat mat_Mc(long p) {
  require_prime(p);
  CycMat m(p, p);
  if (p == 2) {
    m.at(0, 1) = CycNum::zeta(4, 1);
    m.at(1, 0) = CycNum::zeta(4, 1);
  } else {
    for (long j = 0; j < p; ++j) m.at((j + 1) % p, j) = CycNum(1);
  }
  return ProjMat(std::move(m));
}

ProjMat mat_perm(long p, const std::vector<long>& sigma) {
  if ((long)sigma.size() != p) throw FieldError("permutation size mismatch");
  CycMat m(p, p);
  for (long j = 0; j < p; ++j) m.at(sigma[j], j) = CycNum(1);
  return ProjMat(std::move(m));
}

ProjMat vandermonde(long p) {
  CycMat m(p, p);
  for (long i = 0; i < p; ++i)
    for (long j = 0; j < p; ++j) m.at(i, j) = CycNum::zeta(p, i * j);
  return ProjMat(std::move(m));
}

ProjMat mat_S(long p) {
  CycMat m(p, p);
  for (long i = 0; i < p; ++i)
    m.at(i, i) = CycNum::zeta(p, (i * (i + 1) / 2) % p);
  return ProjMat(std::move(m));
}

ProjMat mat_torsion_diag(long p, long m, const std::vector<long>& e) {
  if ((long)e.size() != p) throw FieldError("exponent vector size mismatch");
  CycMat mt(p, p);
  for (long i = 0; i < p; ++i) mt.at(i, i) = CycNum::zeta(m, e[i]);
  return ProjMat(std::move(mt));
}

std::optional<long> scalar_commutator(const ProjMat& A, const ProjMat& B) {
  long p = (long)A.dim();
  CycMat c = A.lift() * B.lift() * inverse(A.lift()) * inverse(B.lift());
  auto s = c.as_scalar();
  if (!s) return std::nullopt;
  for (long k = 0; k < p; ++k)
    if (*s == CycNum::zeta(p, k)) return k;
  return std::nullopt;
}

}  // namespace badlocus
