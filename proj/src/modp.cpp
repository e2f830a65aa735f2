#include "badlocus/modp.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace badlocus {

FpMat FpMat::identity(long p, size_t n) {
  FpMat m(p, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat operator*(const FpMat& x, const FpMat& y) {
  if (x.cols != y.rows || x.p != y.p) throw FieldError("FpMat shape mismatch");
  FpMat r(x.p, x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      long v = x.at(i, k);
      if (!v) continue;
      for (size_t j = 0; j < y.cols; ++j)
        r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.p;
    }
  return r;
}

long fp_inv(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw FieldError("inverse of zero mod p");
  long r = 1;
  long e = p - 2;  // p prime
  long b = a;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::vector<size_t> fp_rref(FpMat& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t piv = row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
    long inv = fp_inv(m.at(row, col), m.p);
    for (size_t j = col; j < m.cols; ++j)
      m.at(row, j) = m.at(row, j) * inv % m.p;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      long f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j)
        m.at(i, j) = ((m.at(i, j) - f * m.at(row, j)) % m.p + m.p) % m.p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t fp_rank(FpMat m) { return fp_rref(m).size(); }

std::vector<std::vector<long>> fp_kernel(const FpMat& m0) {
  FpMat m = m0;
  auto pivots = fp_rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<long>> basis;
  for (size_t freec = 0; freec < m.cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<long> v(m.cols, 0);
    v[freec] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (m.p - m.at(r, freec)) % m.p;
    basis.push_back(std::move(v));
  }
  return basis;
}

FpSubspace FpSubspace::span(long p, size_t ambient,
                            const std::vector<std::vector<long>>& gens) {
  FpMat m(p, gens.size(), ambient);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < ambient; ++j)
      m.at(i, j) = ((gens[i][j] % p) + p) % p;
  auto piv = fp_rref(m);
  FpSubspace s;
  s.p = p;
  s.ambient = ambient;
  s.basis = FpMat(p, piv.size(), ambient);
  for (size_t i = 0; i < piv.size(); ++i)
    for (size_t j = 0; j < ambient; ++j) s.basis.at(i, j) = m.at(i, j);
  return s;
}

bool FpSubspace::contains(const std::vector<long>& v) const {
  std::vector<long> w(v);
  for (auto& x : w) x = ((x % p) + p) % p;
  // Reduce against rref rows.
  for (size_t r = 0; r < basis.rows; ++r) {
    size_t lead = 0;
    while (lead < ambient && basis.at(r, lead) == 0) ++lead;
    if (lead == ambient) continue;
    long f = w[lead];
    if (!f) continue;
    for (size_t j = 0; j < ambient; ++j)
      w[j] = ((w[j] - f * basis.at(r, j)) % p + p) % p;
  }
  for (long x : w)
    if (x) return false;
  return true;
}

bool FpSubspace::operator==(const FpSubspace& o) const {
  return p == o.p && ambient == o.ambient && basis == o.basis;
}

FpSubspace intersect(const FpSubspace& a, const FpSubspace& b) {
  if (a.p != b.p || a.ambient != b.ambient)
    throw FieldError("subspace ambient mismatch");
  // Intersection = common kernel of both annihilators.
  auto ann_a = fp_kernel(a.basis);
  auto ann_b = fp_kernel(b.basis);
  FpMat c(a.p, ann_a.size() + ann_b.size(), a.ambient);
  for (size_t i = 0; i < ann_a.size(); ++i)
    for (size_t j = 0; j < a.ambient; ++j) c.at(i, j) = ann_a[i][j];
  for (size_t i = 0; i < ann_b.size(); ++i)
    for (size_t j = 0; j < a.ambient; ++j)
      c.at(ann_a.size() + i, j) = ann_b[i][j];
  return FpSubspace::span(a.p, a.ambient, fp_kernel(c));
}

std::vector<FpSubspace> hyperplanes(long p, size_t r) {
  std::vector<FpSubspace> out;
  // Normalized covectors: first nonzero entry 1.
  std::vector<long> c(r, 0);
  auto next = [&]() {
    size_t i = 0;
    while (i < r && ++c[i] == p) c[i++] = 0;
    return i < r;
  };
  while (next()) {
    size_t lead = 0;
    while (c[lead] == 0) ++lead;
    if (c[lead] != 1) continue;
    FpMat m(p, 1, r);
    for (size_t j = 0; j < r; ++j) m.at(0, j) = c[j];
    out.push_back(FpSubspace::span(p, r, fp_kernel(m)));
  }
  return out;
}

// ---------------------------------------------------------------------------

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw FieldError("IntMat shape mismatch");
  IntMat r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (size_t j = 0; j < y.cols; ++j)
        r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

SnfResult smith_normal_form(IntMat A) {
  size_t n = A.rows, m = A.cols;
  IntMat U = IntMat::identity(n), V = IntMat::identity(m);

  auto row_op = [&](size_t i, size_t j, const mpz_class& f) {
    // row_i -= f * row_j
    for (size_t k = 0; k < m; ++k) A.at(i, k) -= f * A.at(j, k);
    for (size_t k = 0; k < n; ++k) U.at(i, k) -= f * U.at(j, k);
  };
  auto col_op = [&](size_t i, size_t j, const mpz_class& f) {
    for (size_t k = 0; k < n; ++k) A.at(k, i) -= f * A.at(k, j);
    for (size_t k = 0; k < m; ++k) V.at(k, i) -= f * V.at(k, j);
  };
  auto row_swap = [&](size_t i, size_t j) {
    for (size_t k = 0; k < m; ++k) std::swap(A.at(i, k), A.at(j, k));
    for (size_t k = 0; k < n; ++k) std::swap(U.at(i, k), U.at(j, k));
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t k = 0; k < n; ++k) std::swap(A.at(k, i), A.at(k, j));
    for (size_t k = 0; k < m; ++k) std::swap(V.at(k, i), V.at(k, j));
  };

  size_t t = 0;
  while (t < n && t < m) {
    // Find a nonzero pivot with minimal absolute value.
    size_t bi = t, bj = t;
    bool found = false;
    mpz_class best;
    for (size_t i = t; i < n; ++i)
      for (size_t j = t; j < m; ++j) {
        if (A.at(i, j) == 0) continue;
        mpz_class v = abs(A.at(i, j));
        if (!found || v < best) {
          best = v;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) break;
    row_swap(t, bi);
    col_swap(t, bj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < n; ++i) {
        if (A.at(i, t) == 0) continue;
        mpz_class f = A.at(i, t) / A.at(t, t);
        // Round toward making remainder small.
        row_op(i, t, f);
        if (A.at(i, t) != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < m; ++j) {
        if (A.at(t, j) == 0) continue;
        mpz_class f = A.at(t, j) / A.at(t, t);
        col_op(j, t, f);
        if (A.at(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
    }
    ++t;
  }
  // Enforce divisibility d_i | d_{i+1}: replace each offending diagonal pair
  // (a, b) by (gcd, lcm) with explicit unimodular transforms, sweeping until
  // stable.
  bool stable = false;
  while (!stable) {
    stable = true;
    for (size_t i = 0; i + 1 < t; ++i) {
      size_t j = i + 1;
      if (A.at(i, i) != 0 && A.at(j, j) % A.at(i, i) == 0) continue;
      stable = false;
      col_op(i, j, mpz_class(-1));  // col_i += col_j: puts d_j at (j, i)
      // Euclid on rows i, j down column i.
      while (A.at(j, i) != 0) {
        mpz_class f = A.at(i, i) / A.at(j, i);
        row_op(i, j, f);
        row_swap(i, j);
      }
      // Column-1 entries in rows i, j are multiples of the new gcd at (i,i);
      // clear the fill-in at (i, j).
      if (A.at(i, j) != 0) {
        mpz_class f = A.at(i, j) / A.at(i, i);
        col_op(j, i, f);
        if (A.at(i, j) != 0) throw FieldError("snf divisibility fixup failed");
      }
    }
  }
  // Normalize signs.
  for (size_t i = 0; i < t; ++i) {
    if (A.at(i, i) < 0) {
      for (size_t k = 0; k < m; ++k) A.at(i, k) = -A.at(i, k);
      for (size_t k = 0; k < n; ++k) U.at(i, k) = -U.at(i, k);
    }
  }
  SnfResult res;
  res.U = std::move(U);
  res.V = std::move(V);
  for (size_t i = 0; i < t; ++i) res.invariants.push_back(A.at(i, i));
  res.D = std::move(A);
  return res;
}

std::vector<std::vector<mpz_class>> int_kernel(const IntMat& A) {
  SnfResult s = smith_normal_form(A);
  size_t r = s.invariants.size();
  std::vector<std::vector<mpz_class>> out;
  for (size_t j = r; j < A.cols; ++j) {
    std::vector<mpz_class> v(A.cols);
    for (size_t i = 0; i < A.cols; ++i) v[i] = s.V.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<mpz_class> quotient_invariants(const IntMat& A) {
  SnfResult s = smith_normal_form(A);
  std::vector<mpz_class> out;
  for (const auto& d : s.invariants)
    if (d > 1) out.push_back(d);
  for (size_t i = s.invariants.size(); i < A.rows; ++i) out.push_back(0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

long SymplecticSpace::form(const std::vector<long>& u,
                           const std::vector<long>& v) const {
  long s = 0;
  for (long i = 0; i < g; ++i) {
    s += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i];
  }
  return ((s % p) + p) % p;
}

FpMat SymplecticSpace::gram() const {
  FpMat m(p, dim(), dim());
  for (long i = 0; i < g; ++i) {
    m.at(2 * i, 2 * i + 1) = 1;
    m.at(2 * i + 1, 2 * i) = p - 1;
  }
  return m;
}

long pair_degeneracy(const SymplecticSpace& sp, const FpSubspace& E,
                     const FpSubspace& E2) {
  FpSubspace I = intersect(E, E2);
  size_t k = I.dim();
  FpMat gram(sp.p, k, k);
  for (size_t i = 0; i < k; ++i) {
    std::vector<long> u(I.ambient), v(I.ambient);
    for (size_t t = 0; t < I.ambient; ++t) u[t] = I.basis.at(i, t);
    for (size_t j = 0; j < k; ++j) {
      for (size_t t = 0; t < I.ambient; ++t) v[t] = I.basis.at(j, t);
      gram.at(i, j) = sp.form(u, v);
    }
  }
  return (long)(k - fp_rank(gram));
}

namespace {

struct FpMatHash {
  size_t operator()(const FpMat& m) const {
    size_t h = m.rows * 31 + m.p;
    for (long v : m.a) h = h * 1000003u + (size_t)v;
    return h;
  }
};

std::vector<FpMat> transvection_generators(const SymplecticSpace& sp) {
  long p = sp.p;
  size_t n = sp.dim();
  std::vector<FpMat> gens;
  std::vector<long> v(n, 0);
  auto next = [&]() {
    size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    return i < n;
  };
  while (next()) {
    FpMat T(p, n, n);
    for (size_t j = 0; j < n; ++j) {
      std::vector<long> e(n, 0);
      e[j] = 1;
      long c = sp.form(e, v);
      for (size_t i = 0; i < n; ++i)
        T.at(i, j) = (((i == j ? 1 : 0) + c * v[i]) % p + p) % p;
    }
    gens.push_back(std::move(T));
  }
  return gens;
}

}  // namespace

size_t symplectic_group_order(const SymplecticSpace& sp, size_t cap) {
  auto gens = transvection_generators(sp);
  std::unordered_set<FpMat, FpMatHash> seen;
  std::vector<FpMat> queue{FpMat::identity(sp.p, sp.dim())};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    FpMat cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      FpMat nx = cur * g;
      if (seen.insert(nx).second) {
        if (seen.size() > cap) throw FieldError("group closure cap exceeded");
        queue.push_back(std::move(nx));
      }
    }
  }
  return seen.size();
}

size_t sp_orbit_count_on_hyperplane_pairs(const SymplecticSpace& sp) {
  long p = sp.p;
  size_t n = sp.dim();
  auto hps = hyperplanes(p, n);
  // Index hyperplanes by normalized covector for O(1) lookup.
  auto covector_of = [&](const FpSubspace& h) {
    auto ann = fp_kernel(h.basis);
    std::vector<long> c = ann.at(0);
    size_t lead = 0;
    while (c[lead] == 0) ++lead;
    long inv = fp_inv(c[lead], p);
    for (auto& x : c) x = x * inv % p;
    return c;
  };
  std::unordered_map<std::string, size_t> index;
  std::vector<std::vector<long>> covs;
  for (size_t i = 0; i < hps.size(); ++i) {
    auto c = covector_of(hps[i]);
    std::string key;
    for (long x : c) key += (char)('0' + x);
    index[key] = i;
    covs.push_back(c);
  }
  auto gens = transvection_generators(sp);
  std::vector<FpMat> all_gens = gens;  // transvections generate; inverses are
                                       // transvections too (T_v^{-1} = T_v
                                       // applied p-1 times), so BFS with the
                                       // generators alone reaches the orbit.
  for (const auto& g : gens) {
    // Also include powers to make the action set symmetric.
    FpMat acc = g;
    for (long e = 2; e < p; ++e) {
      acc = acc * g;
      all_gens.push_back(acc);
    }
  }
  // g sends ker(c) to ker(c g^{-1}); with generator set closed under
  // inverses, acting by c -> c g reaches the same orbits.
  size_t H = hps.size();
  std::vector<long> comp(H * H, -1);
  long ncomp = 0;
  for (size_t a = 0; a < H; ++a)
    for (size_t b = 0; b < H; ++b) {
      if (a == b || comp[a * H + b] >= 0) continue;
      // BFS this orbit.
      std::vector<std::pair<size_t, size_t>> stack{{a, b}};
      comp[a * H + b] = ncomp;
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (const auto& g : all_gens) {
          auto act = [&](size_t hi) {
            std::vector<long> c(n, 0);
            for (size_t j = 0; j < n; ++j)
              for (size_t k = 0; k < n; ++k)
                c[j] = (c[j] + covs[hi][k] * g.at(k, j)) % p;
            size_t lead = 0;
            while (c[lead] == 0) ++lead;
            long inv = fp_inv(c[lead], p);
            std::string key;
            for (long v : c) key += (char)('0' + v * inv % p);
            return index.at(key);
          };
          size_t nx = act(x), ny = act(y);
          if (comp[nx * H + ny] < 0) {
            comp[nx * H + ny] = ncomp;
            stack.push_back({nx, ny});
          }
        }
      }
      ++ncomp;
    }
  return (size_t)ncomp;
}

FpSubspace find_E0(const SymplecticSpace& sp, const FpSubspace& E,
                   const FpSubspace& E2) {
  if (E == E2) throw FieldError("find_E0 requires distinct hyperplanes");
  // Target the opposite degeneracy type of the given pair.
  long want = pair_degeneracy(sp, E, E2) == 0 ? 2 : 0;
  for (const auto& H : hyperplanes(sp.p, sp.dim())) {
    if (H == E || H == E2) continue;
    if (pair_degeneracy(sp, E, H) == want && pair_degeneracy(sp, E2, H) == want)
      return H;
  }
  throw FieldError("no companion hyperplane of the opposite type found");
}

}  // namespace badlocus
