#include "badlocus/cyclo.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace badlocus {

namespace {

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly padd(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly psub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly pmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// a = q*b + r with deg r < deg b.
void pdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  r = a;
}

QPoly pmod(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  pdivmod(a, b, q, r);
  return r;
}

}  // namespace

long phi(long n) {
  long r = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      r -= r / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

const QPoly& cyclotomic_poly(long n) {
  static std::map<long, QPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  QPoly num(n + 1, Rat(0));  // x^n - 1
  num[0] = -1;
  num[n] = 1;
  QPoly den{Rat(1)};
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) den = pmul(den, cyclotomic_poly(d));
  }
  QPoly q, r;
  pdivmod(num, den, q, r);
  if (!r.empty()) throw FieldError("cyclotomic polynomial division not exact");
  return cache.emplace(n, std::move(q)).first->second;
}

// Reduce an arbitrary polynomial mod Phi_n and pad to length phi(n).
static QPoly reduce_mod_phi(long n, QPoly c) {
  const QPoly& ph = cyclotomic_poly(n);
  c = pmod(c, ph);
  c.resize(phi(n), Rat(0));
  return c;
}

CycNum CycNum::zeta(long n, long k) {
  if (n <= 0) throw FieldError("order must be positive");
  k %= n;
  if (k < 0) k += n;
  QPoly x(k + 1, Rat(0));
  x[k] = 1;
  CycNum r;
  r.n_ = n;
  r.c_ = reduce_mod_phi(n, std::move(x));
  return r;
}

CycNum CycNum::from_coeffs(long n, QPoly c) {
  if ((long)c.size() > phi(n)) throw FieldError("coefficient vector too long");
  c.resize(phi(n), Rat(0));
  CycNum r;
  r.n_ = n;
  r.c_ = std::move(c);
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<Rat> CycNum::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

CycNum CycNum::lifted_to(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw FieldError("lift target is not a multiple of order");
  long t = m / n_;
  QPoly c;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    size_t d = i * t;
    if (c.size() <= d) c.resize(d + 1, Rat(0));
    c[d] += c_[i];
  }
  CycNum r;
  r.n_ = m;
  r.c_ = reduce_mod_phi(m, std::move(c));
  return r;
}

std::pair<CycNum, CycNum> CycNum::lift_to_common_order(const CycNum& a,
                                                       const CycNum& b) {
  long m = std::lcm(a.n_, b.n_);
  return {a.lifted_to(m), b.lifted_to(m)};
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  auto [x, y] = CycNum::lift_to_common_order(a, b);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  auto [x, y] = CycNum::lift_to_common_order(a, b);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
  return x;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  auto [x, y] = CycNum::lift_to_common_order(a, b);
  QPoly prod = pmul(x.c_, y.c_);
  CycNum r;
  r.n_ = x.n_;
  r.c_ = reduce_mod_phi(x.n_, std::move(prod));
  return r;
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  // Extended Euclid on (c_, Phi_n) over Q[x]; Phi_n is irreducible, so the
  // gcd is a nonzero constant.
  QPoly r0 = c_;
  trim(r0);
  QPoly r1 = cyclotomic_poly(n_);
  QPoly s0{Rat(1)}, s1{};
  while (!r1.empty()) {
    QPoly q, r;
    pdivmod(r0, r1, q, r);
    QPoly s2 = psub(s0, pmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw FieldError("inverse: unexpected gcd degree");
  Rat g = r0[0];
  for (auto& x : s0) x /= g;
  CycNum out;
  out.n_ = n_;
  out.c_ = reduce_mod_phi(n_, std::move(s0));
  return out;
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum base = *this;
  CycNum acc(1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool CycNum::operator==(const CycNum& b) const {
  if (n_ == b.n_) return c_ == b.c_;
  auto [x, y] = lift_to_common_order(*this, b);
  return x.c_ == y.c_;
}

// Try to express this value in Q(zeta_d) for d | n, smallest d first.
CycNum CycNum::reduced() const {
  if (n_ == 1) return *this;
  for (long d = 1; d < n_; ++d) {
    if (n_ % d != 0) continue;
    long pd = phi(d), pn = phi(n_);
    if (pd > pn) continue;
    // Basis images of zeta_d^j inside Q(zeta_n); solve for rational combo.
    std::vector<QPoly> basis;
    for (long j = 0; j < pd; ++j)
      basis.push_back(CycNum::zeta(d, j).lifted_to(n_).c_);
    // Gaussian elimination on the pn x (pd+1) system basis * a = c_.
    std::vector<QPoly> rows(pn, QPoly(pd + 1, Rat(0)));
    for (long i = 0; i < pn; ++i) {
      for (long j = 0; j < pd; ++j) rows[i][j] = basis[j][i];
      rows[i][pd] = c_[i];
    }
    long rank = 0;
    for (long col = 0; col < pd && rank < pn; ++col) {
      long piv = -1;
      for (long i = rank; i < pn; ++i)
        if (rows[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      Rat lead = rows[rank][col];
      for (auto& x : rows[rank]) x /= lead;
      for (long i = 0; i < pn; ++i) {
        if (i == rank || rows[i][col] == 0) continue;
        Rat f = rows[i][col];
        for (long j = col; j <= pd; ++j) rows[i][j] -= f * rows[rank][j];
      }
      ++rank;
    }
    bool consistent = true;
    for (long i = rank; i < pn; ++i)
      if (rows[i][pd] != 0) {
        consistent = false;
        break;
      }
    if (!consistent) continue;
    // Read solution (columns are in echelon order since basis vectors are
    // linearly independent: rank == pd).
    if (rank != pd) continue;
    QPoly sol(pd, Rat(0));
    for (long i = 0; i < pd; ++i) {
      // Row i has pivot at column i.
      sol[i] = rows[i][pd];
    }
    return CycNum::from_coeffs(d, std::move(sol));
  }
  return *this;
}

size_t CycNum::hash() const {
  CycNum r = reduced();
  std::string s = std::to_string(r.n_) + "|";
  for (const auto& x : r.c_) s += x.get_str() + ",";
  return std::hash<std::string>{}(s);
}

std::string CycNum::str() const {
  CycNum r = reduced();
  if (r.is_rational()) return r.c_[0].get_str();
  std::string s = "(";
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i) s += " + ";
    s += r.c_[i].get_str();
    if (i >= 1) {
      s += "*z" + std::to_string(r.n_);
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s + ")";
}

std::optional<std::pair<long, long>> CycNum::as_root_of_unity() const {
  CycNum r = reduced();
  long n = r.order();
  // Roots of unity in Q(zeta_n) form mu_n (n even) or mu_2n (n odd).
  long cap = (n % 2 == 0) ? n : 2 * n;
  CycNum one(1);
  CycNum acc(1);
  long ord = -1;
  for (long k = 1; k <= cap; ++k) {
    acc = acc * r;
    if (acc == one) {
      ord = k;
      break;
    }
  }
  if (ord < 0) return std::nullopt;
  for (long j = 0; j < ord; ++j) {
    if (CycNum::zeta(ord, j) == r) return std::make_pair(ord, j);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// p-th roots in a cyclotomic field.
// ---------------------------------------------------------------------------

namespace {

using Z = mpz_class;

Z zpow(Z b, Z e, const Z& mod) {
  Z r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Z zinv(const Z& a, const Z& mod) {
  Z r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()))
    throw FieldError("modular inverse does not exist");
  return r;
}

// p-th root of a modulo prime q (Adleman-Manders-Miller); requires that a is
// a nonzero p-th power residue.  Returns nullopt if a is not a p-th power.
std::optional<Z> amm_root(const Z& a, long p, const Z& q, gmp_randstate_t rng) {
  Z qm1 = q - 1;
  long t = 0;
  Z s = qm1;
  while (s % p == 0) {
    s /= p;
    ++t;
  }
  if (t == 0) {
    Z e = zinv(Z(p), qm1);
    return zpow(a, e, q);
  }
  if (zpow(a, qm1 / p, q) != 1) return std::nullopt;
  // Split a into its order-s part and Sylow-p part.
  Z pt = 1;
  for (long i = 0; i < t; ++i) pt *= p;
  Z u = zinv(s % pt, pt);  // s is coprime to p, hence invertible mod p^t
  Z a_p = zpow(a, (s * u) % (qm1), q);     // s*u = 1 mod p^t, 0 mod s
  Z w = zinv(pt, s);
  Z a_s = zpow(a, (pt * w) % qm1, q);
  Z root_s = zpow(a_s, zinv(Z(p), s), q);
  // Sylow generator.
  Z b;
  while (true) {
    Z c;
    mpz_urandomm(c.get_mpz_t(), rng, q.get_mpz_t());
    if (c == 0) continue;
    if (zpow(c, qm1 / p, q) != 1) {
      b = zpow(c, s, q);
      break;
    }
  }
  // Discrete log of a_p base b in the cyclic p-group of order p^t (t small).
  Z e = 0, pk = 1;
  Z cur = a_p;
  for (long i = 0; i < t; ++i) {
    Z probe = zpow(cur * zinv(zpow(b, e, q), q) % q, pt / (pk * p), q);
    long digit = -1;
    Z g = zpow(b, pt / p, q);  // order-p element
    Z acc = 1;
    for (long d = 0; d < p; ++d) {
      if (acc == probe) {
        digit = d;
        break;
      }
      acc = acc * g % q;
    }
    if (digit < 0) return std::nullopt;
    e += pk * digit;
    pk *= p;
  }
  if (e % p != 0) return std::nullopt;
  Z root_p = zpow(b, e / p, q);
  return root_s * root_p % q;
}

struct ModPoly {
  std::vector<Z> c;  // ascending
  Z eval(const Z& x, const Z& mod) const {
    Z r = 0;
    for (size_t i = c.size(); i-- > 0;) r = (r * x + c[i]) % mod;
    if (r < 0) r += mod;
    return r;
  }
};

// Rational reconstruction of a mod M: n/d with |n|, d <= sqrt(M/2).
std::optional<Rat> rat_reconstruct(Z a, const Z& M) {
  a %= M;
  if (a < 0) a += M;
  Z bound;
  mpz_sqrt(bound.get_mpz_t(), Z(M / 2).get_mpz_t());
  Z r0 = M, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Z qq = r0 / r1;
    Z r2 = r0 - qq * r1;
    Z t2 = t0 - qq * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  Z num = r1, den = t1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (den > bound) return std::nullopt;
  if (gcd(num, den) != 1) {
    Z g = gcd(num, den);
    num /= g;
    den /= g;
  }
  Rat out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

std::optional<CycNum> pth_root_in_field(const CycNum& s_in, long p,
                                        long field_order) {
  long L = field_order;
  CycNum s = s_in.lifted_to(L);
  if (s.is_zero()) return CycNum(0);

  // Cheap candidates: roots of unity in mu_L and rational multiples thereof.
  for (long j = 0; j < L; ++j) {
    CycNum z = CycNum::zeta(L, j);
    if (z.pow(p) == s) return z;
    CycNum rest = s * z.pow(-p);
    if (auto r = rest.to_rational()) {
      // Rational p-th root?
      Z num = r->get_num(), den = r->get_den();
      bool neg = num < 0;
      if (neg && p % 2 == 0) continue;
      Z an = abs(num);
      Z rn, rd;
      if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), p) &&
          mpz_root(rd.get_mpz_t(), den.get_mpz_t(), p)) {
        Rat t(neg ? -rn : rn, rd);
        t.canonicalize();
        CycNum cand = CycNum(t) * z;
        if (cand.pow(p) == s) return cand;
      }
    }
  }

  // Modular method: embed into Z/q via the roots of Phi_L, take p-th roots
  // per embedding, Hensel-lift, interpolate, and rationally reconstruct.
  long d = phi(L);
  double combos = 1;
  for (long i = 0; i < d; ++i) combos *= p;
  if (combos > 200000) return std::nullopt;

  gmp_randstate_t rng;
  gmp_randinit_default(rng);
  gmp_randseed_ui(rng, 0x5eed);

  long M = std::lcm(L, p);
  // Prime q = k*M + 1 around 2^60.
  Z q;
  {
    Z k = (Z(1) << 60) / M;
    while (true) {
      q = k * M + 1;
      if (mpz_probab_prime_p(q.get_mpz_t(), 30)) break;
      k += 1;
    }
  }

  // Integer models of Phi_L and of s (clear denominators later per-eval).
  const QPoly& ph = cyclotomic_poly(L);

  // Primitive L-th root of unity mod q.
  Z zL;
  {
    Z qm1 = q - 1;
    std::vector<long> prime_divs;
    long tmp = L;
    for (long pr = 2; pr * pr <= tmp; ++pr)
      if (tmp % pr == 0) {
        prime_divs.push_back(pr);
        while (tmp % pr == 0) tmp /= pr;
      }
    if (tmp > 1) prime_divs.push_back(tmp);
    while (true) {
      Z c;
      mpz_urandomm(c.get_mpz_t(), rng, q.get_mpz_t());
      if (c <= 1) continue;
      zL = zpow(c, qm1 / L, q);
      bool ok = zL != 1;
      for (long pr : prime_divs)
        if (ok && zpow(zL, Z(L / pr), q) == 1) ok = false;
      if (ok) break;
    }
  }

  for (int stage = 1; stage <= 3; ++stage) {
    // Working modulus Q = q^(2^stage).
    Z Q = 1;
    for (int i = 0; i < (1 << stage); ++i) Q *= q;

    // Roots of Phi_L mod Q (Hensel-lifted primitive roots).
    std::vector<Z> W;
    for (long j = 1; j < L; ++j) {
      if (std::gcd(j, L) != 1) continue;
      Z w = zpow(zL, Z(j), q);
      // Newton-lift w as a root of x^L - 1 (simple root mod q).
      Z mod = q;
      while (mod < Q) {
        mod = mod * mod;
        if (mod > Q) mod = Q;
        Z f = (zpow(w, Z(L), mod) - 1) % mod;
        Z fp = Z(L) * zpow(w, Z(L - 1), mod) % mod;
        w = (w - f * zinv(fp, mod)) % mod;
        if (w < 0) w += mod;
      }
      W.push_back(w);
    }
    if ((long)W.size() != d) throw FieldError("root count mismatch");

    // Embeddings of s.
    std::vector<Z> sv(d);
    bool bad_prime = false;
    for (long i = 0; i < d; ++i) {
      Z acc = 0;
      for (size_t k2 = s.coeffs().size(); k2-- > 0;) {
        const Rat& cf = s.coeffs()[k2];
        Z term = cf.get_num() % Q * zinv(cf.get_den() % Q, Q) % Q;
        acc = (acc * W[i] + term) % Q;
      }
      if (acc < 0) acc += Q;
      sv[i] = acc;
      if (acc % q == 0) bad_prime = true;
    }
    if (bad_prime) return std::nullopt;  // s vanishes mod q; give up

    // Base p-th roots mod q, lifted to mod Q.
    std::vector<Z> rv(d);
    for (long i = 0; i < d; ++i) {
      auto r0 = amm_root(sv[i] % q, p, q, rng);
      if (!r0) {
        gmp_randclear(rng);
        return std::nullopt;  // no root in any extension compatible with q
      }
      Z r = *r0;
      Z mod = q;
      while (mod < Q) {
        mod = mod * mod;
        if (mod > Q) mod = Q;
        Z f = (zpow(r, Z(p), mod) - sv[i] % mod) % mod;
        Z fp = Z(p) * zpow(r, Z(p - 1), mod) % mod;
        r = (r - f * zinv(fp, mod)) % mod;
        if (r < 0) r += mod;
      }
      rv[i] = r;
    }

    // Primitive p-th root of unity mod Q.
    Z omega = 1;
    if (p > 1) {
      Z w0;
      while (true) {
        Z c;
        mpz_urandomm(c.get_mpz_t(), rng, q.get_mpz_t());
        if (c <= 1) continue;
        w0 = zpow(c, (q - 1) / p, q);
        if (w0 != 1) break;
      }
      Z mod = q;
      Z w = w0;
      while (mod < Q) {
        mod = mod * mod;
        if (mod > Q) mod = Q;
        Z f = (zpow(w, Z(p), mod) - 1) % mod;
        Z fp = Z(p) * zpow(w, Z(p - 1), mod) % mod;
        w = (w - f * zinv(fp, mod)) % mod;
        if (w < 0) w += mod;
      }
      omega = w;
    }
    std::vector<Z> omegas(p);
    omegas[0] = 1;
    for (long i = 1; i < p; ++i) omegas[i] = omegas[i - 1] * omega % Q;

    // Lagrange interpolation weights.
    std::vector<Z> denom(d, 1);
    for (long i = 0; i < d; ++i) {
      for (long j = 0; j < d; ++j) {
        if (i == j) continue;
        denom[i] = denom[i] * ((W[i] - W[j]) % Q) % Q;
      }
      if (denom[i] < 0) denom[i] += Q;
      denom[i] = zinv(denom[i], Q);
    }

    // Enumerate root-choice tuples.
    std::vector<long> tup(d, 0);
    while (true) {
      std::vector<Z> v(d);
      for (long i = 0; i < d; ++i) v[i] = rv[i] * omegas[tup[i]] % Q;
      // Interpolate polynomial of degree < d through (W_i, v_i).
      std::vector<Z> poly(d, 0);
      for (long i = 0; i < d; ++i) {
        // Build prod_{j != i} (x - W_j) incrementally.
        std::vector<Z> basis{1};
        for (long j = 0; j < d; ++j) {
          if (j == i) continue;
          std::vector<Z> nb(basis.size() + 1, 0);
          for (size_t k2 = 0; k2 < basis.size(); ++k2) {
            nb[k2 + 1] = (nb[k2 + 1] + basis[k2]) % Q;
            nb[k2] = (nb[k2] - basis[k2] * W[j]) % Q;
          }
          basis = std::move(nb);
        }
        Z scale = v[i] * denom[i] % Q;
        for (size_t k2 = 0; k2 < basis.size(); ++k2)
          poly[k2] = (poly[k2] + basis[k2] * scale) % Q;
      }
      // Rational reconstruction of coefficients.
      bool ok = true;
      QPoly cand(d, Rat(0));
      for (long i = 0; i < d && ok; ++i) {
        auto rr = rat_reconstruct(poly[i], Q);
        if (!rr)
          ok = false;
        else
          cand[i] = *rr;
      }
      if (ok) {
        CycNum lam = CycNum::from_coeffs(L, cand);
        if (lam.pow(p) == s) {
          gmp_randclear(rng);
          return lam;
        }
      }
      // Next tuple.
      long pos = 0;
      while (pos < d && ++tup[pos] == p) {
        tup[pos] = 0;
        ++pos;
      }
      if (pos == d) break;
    }
  }
  gmp_randclear(rng);
  return std::nullopt;
}

}  // namespace badlocus
