#include "badlocus/torsion.hpp"

namespace badlocus {

namespace {
long mod(long a, long m) { return ((a % m) + m) % m; }
}  // namespace

TorsionDiag::TorsionDiag(long p_, long m_, std::vector<long> raw)
    : p(p_), m(m_), e(std::move(raw)) {
  if ((long)e.size() != p) throw FieldError("exponent vector length mismatch");
  long base = e[0];
  for (auto& x : e) x = mod(x - base, m);
}

TorsionDiag TorsionDiag::zero(long p, long m) {
  return TorsionDiag(p, m, std::vector<long>(p, 0));
}

TorsionDiag TorsionDiag::d_xi(long p, long m) {
  if (m % p != 0) throw FieldError("d_xi requires p | m");
  std::vector<long> e(p);
  for (long i = 0; i < p; ++i) e[i] = i * (m / p);
  return TorsionDiag(p, m, std::move(e));
}

bool TorsionDiag::is_zero() const {
  for (long x : e)
    if (x != 0) return false;
  return true;
}

TorsionDiag TorsionDiag::operator+(const TorsionDiag& o) const {
  if (p != o.p || m != o.m) throw FieldError("torsion parameter mismatch");
  std::vector<long> s(p);
  for (long i = 0; i < p; ++i) s[i] = e[i] + o.e[i];
  return TorsionDiag(p, m, std::move(s));
}

TorsionDiag TorsionDiag::operator-() const {
  std::vector<long> s(p);
  for (long i = 0; i < p; ++i) s[i] = -e[i];
  return TorsionDiag(p, m, std::move(s));
}

TorsionDiag TorsionDiag::scaled(long c) const {
  std::vector<long> s(p);
  for (long i = 0; i < p; ++i) s[i] = mod(e[i] * mod(c, m), m);
  return TorsionDiag(p, m, std::move(s));
}

TorsionDiag TorsionDiag::shifted(long k) const {
  std::vector<long> s(p);
  for (long i = 0; i < p; ++i) s[i] = e[mod(i - k, p)];
  return TorsionDiag(p, m, std::move(s));
}

ProjMat TorsionDiag::to_projmat() const {
  return mat_torsion_diag(p, m, e);
}

}  // namespace badlocus
