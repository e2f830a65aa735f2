#include "badlocus/pseudo.hpp"

#include <algorithm>
#include <map>

#include "badlocus/group_engine.hpp"

namespace badlocus {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

// Column Hermite form (lower triangular, positive diagonal, entries left of
// each pivot reduced) of a full-rank p x k integer matrix, k >= p.
IntMat hnf_columns(IntMat A) {
  size_t p = A.rows, k = A.cols;
  auto col_sub = [&](size_t dst, size_t src, const mpz_class& q) {
    for (size_t i = 0; i < p; ++i) A.at(i, dst) -= q * A.at(i, src);
  };
  auto col_swap = [&](size_t x, size_t y) {
    for (size_t i = 0; i < p; ++i) std::swap(A.at(i, x), A.at(i, y));
  };
  size_t c = 0;
  for (size_t r = 0; r < p; ++r) {
    // Clear row r to a single nonzero among columns >= c.
    while (true) {
      size_t best = k;
      for (size_t j = c; j < k; ++j)
        if (A.at(r, j) != 0 &&
            (best == k || abs(A.at(r, j)) < abs(A.at(r, best))))
          best = j;
      if (best == k) throw FieldError("lattice not full rank");
      col_swap(c, best);
      bool more = false;
      for (size_t j = c + 1; j < k; ++j)
        if (A.at(r, j) != 0) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), A.at(r, j).get_mpz_t(),
                     A.at(r, c).get_mpz_t());
          col_sub(j, c, q);
          if (A.at(r, j) != 0) more = true;
        }
      if (!more) break;
    }
    if (A.at(r, c) < 0)
      for (size_t i = 0; i < p; ++i) A.at(i, c) = -A.at(i, c);
    // Reduce the columns left of the pivot.
    for (size_t j = 0; j < c; ++j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), A.at(r, j).get_mpz_t(), A.at(r, c).get_mpz_t());
      col_sub(j, c, q);
    }
    ++c;
  }
  IntMat out(p, p);
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j) out.at(i, j) = A.at(i, j);
  return out;
}

mpz_class diag_det(const IntMat& L) {
  mpz_class d = 1;
  for (size_t i = 0; i < L.rows; ++i) d *= L.at(i, i);
  return d;
}

// Columns of the level-m zero lattice of exponent vectors.
std::vector<std::vector<mpz_class>> zero_lattice_cols(long p, long m) {
  std::vector<std::vector<mpz_class>> out;
  for (long t = 0; t < p; ++t) {
    std::vector<mpz_class> v((size_t)p, 0);
    v[(size_t)t] = m;
    out.push_back(std::move(v));
  }
  out.push_back(std::vector<mpz_class>((size_t)p, 1));
  return out;
}

bool lattice_contains(const IntMat& L, std::vector<mpz_class> v) {
  for (size_t r = 0; r < L.rows; ++r) {
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[r].get_mpz_t(),
                L.at(r, r).get_mpz_t());
    if (rem != 0) return false;
    for (size_t i = r; i < L.rows; ++i) v[i] -= q * L.at(i, r);
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntMat lattice_from_cols(long p,
                         const std::vector<std::vector<mpz_class>>& cols) {
  IntMat A((size_t)p, cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < (size_t)p; ++i) A.at(i, j) = cols[j][i];
  return hnf_columns(std::move(A));
}

}  // namespace

bool DiagSubgroup::contains(const TorsionDiag& d) const {
  std::vector<mpz_class> v(d.e.begin(), d.e.end());
  return lattice_contains(lattice, std::move(v));
}

DiagSubgroup subgroup_generated_by(long p, long m,
                                   const std::vector<TorsionDiag>& gens) {
  auto cols = zero_lattice_cols(p, m);
  for (const auto& g : gens) {
    if (g.p != p || g.m != m) throw FieldError("torsion parameter mismatch");
    for (long k = 0; k < p; ++k) {
      TorsionDiag s = g.shifted(k);
      cols.push_back(std::vector<mpz_class>(s.e.begin(), s.e.end()));
    }
  }
  DiagSubgroup out;
  out.p = p;
  out.m = m;
  out.lattice = lattice_from_cols(p, cols);
  mpz_class full = diag_det(lattice_from_cols(p, zero_lattice_cols(p, m)));
  out.order = (long)mpz_class(full / diag_det(out.lattice)).get_si();
  for (const auto& g : gens)
    if (!g.is_zero()) out.generators.push_back(g);
  return out;
}

std::vector<DiagSubgroup> invariant_subgroups(long p, long m, size_t cap) {
  mpz_class count = 1;
  for (long i = 1; i < p; ++i) count *= m;
  if (count > (long)cap)
    throw ClosureError("too many torsion classes to enumerate");

  std::map<std::vector<mpz_class>, DiagSubgroup> found;
  auto add = [&](const DiagSubgroup& s) {
    auto it = found.find(s.lattice.a);
    if (it == found.end()) {
      found.emplace(s.lattice.a, s);
      return true;
    }
    return false;
  };
  add(subgroup_generated_by(p, m, {}));
  // Cyclic (one-generator) invariant subgroups.
  std::vector<long> e((size_t)p, 0);
  while (true) {
    add(subgroup_generated_by(p, m, {TorsionDiag(p, m, e)}));
    size_t i = 1;
    while (i < (size_t)p && e[i] == m - 1) e[i++] = 0;
    if (i == (size_t)p) break;
    ++e[i];
  }
  // Close under joins.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<DiagSubgroup> cur;
    for (auto& [k, s] : found) cur.push_back(s);
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<TorsionDiag> gens = cur[i].generators;
        gens.insert(gens.end(), cur[j].generators.begin(),
                    cur[j].generators.end());
        DiagSubgroup join = subgroup_generated_by(p, m, gens);
        if (add(join)) grew = true;
      }
  }
  std::vector<DiagSubgroup> out;
  for (auto& [k, s] : found) {
    // Shrink the generating set greedily.
    std::vector<TorsionDiag> mins;
    DiagSubgroup cur = subgroup_generated_by(p, m, {});
    while (cur.order < s.order) {
      const TorsionDiag* best = nullptr;
      long best_order = cur.order;
      for (const auto& g : s.generators) {
        if (cur.contains(g)) continue;
        auto trial = mins;
        trial.push_back(g);
        DiagSubgroup t = subgroup_generated_by(p, m, trial);
        if (t.order > best_order) {
          best_order = t.order;
          best = &g;
        }
      }
      if (!best) throw FieldError("generator minimization failed");
      mins.push_back(*best);
      cur = subgroup_generated_by(p, m, mins);
    }
    cur.lattice = s.lattice;
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end(),
            [](const DiagSubgroup& a, const DiagSubgroup& b) {
              return a.order < b.order || (a.order == b.order &&
                                           a.lattice.a < b.lattice.a);
            });
  return out;
}

RepAssignment build_free_bad_rep(long p, long l,
                                 const std::vector<TorsionDiag>& data) {
  if (l < 2 || (long)data.size() != l - 1)
    throw FieldError("need one torsion class per generator x_2..x_l");
  RepAssignment rho;
  rho.pres = Presentation::free_group((size_t)l);
  rho.images.push_back(mat_Mc(p));
  rho.mc_exponent.assign((size_t)l, 0);
  rho.mc_exponent[0] = 1;
  for (const auto& t : data) {
    if (t.p != p) throw FieldError("torsion dimension mismatch");
    rho.images.push_back(t.to_projmat());
  }
  return rho;
}

RepAssignment build_surface_bad_rep(
    long p, long g, long k,
    const std::vector<std::pair<TorsionDiag, TorsionDiag>>& data) {
  if (g < 2 || (long)data.size() != g - 1)
    throw FieldError("need one torsion pair per handle 2..g");
  RepAssignment rho;
  rho.pres = Presentation::surface_group(g);
  rho.mc_exponent.assign(2 * (size_t)g, 0);
  rho.mc_exponent[0] = 1;
  rho.images.push_back(mat_Mc(p));
  rho.images.push_back(mat_D_xi(p).pow(mod(k, p)));
  for (const auto& [t, u] : data) {
    if (t.p != p || u.p != p || t.m % p != 0 || u.m % p != 0)
      throw FieldError("surface data must be p-divisible level classes");
    rho.images.push_back(t.to_projmat());
    rho.images.push_back(u.to_projmat());
  }
  if (!rho.satisfies_relations())
    throw FieldError("surface relator not satisfied");
  return rho;
}

long euler_invariant(const RepAssignment& rho) {
  size_t n = rho.pres.num_generators;
  if (n % 2 != 0 || rho.pres.relators.size() != 1)
    throw FieldError("Euler invariant needs a surface presentation");
  long p = (long)rho.images.at(0).dim();
  CycMat acc = CycMat::identity((size_t)p);
  for (size_t i = 0; i + 1 < n; i += 2) {
    const CycMat& A = rho.images[i].lift();
    const CycMat& B = rho.images[i + 1].lift();
    acc = acc * A * B * inverse(A) * inverse(B);
  }
  auto s = acc.as_scalar();
  if (!s) throw FieldError("commutator product is not scalar");
  for (long k = 0; k < p; ++k)
    if (*s == CycNum::zeta(p, k)) return k;
  throw FieldError("commutator product is not a p-th root of unity");
}

namespace {
long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

long count_pseudo_components(long p, long r) {
  return (ipow(p, r) - 1) / (p - 1);
}

long count_abelian_irreducible(long p, long r) {
  return (ipow(p, r) - 1) * (ipow(p, r - 1) - 1) / (p * p - 1);
}

long intersection_count(long p) { return p - 1; }

long components_through_abelian(long p) { return p + 1; }

long abelian_irreducible_oracle(long p, long r) {
  if (ipow(p, 2 * r) > 1000000)
    throw FieldError("oracle parameters too large");
  // SL(2, F_p).
  std::vector<std::array<long, 4>> sl2;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d)
          if (mod(a * d - b * c, p) == 1) sl2.push_back({a, b, c, d});

  std::map<std::vector<long>, long> orbit_sizes;
  long total = ipow(p, 2 * r);
  long surjections = 0;
  std::vector<long> M(2 * (size_t)r);  // rows of the 2 x r matrix, flattened
  for (long code = 0; code < total; ++code) {
    long t = code;
    for (auto& x : M) {
      x = t % p;
      t /= p;
    }
    // Rank 2: some 2x2 minor nonzero.
    bool rank2 = false;
    for (long i = 0; i < r && !rank2; ++i)
      for (long j = i + 1; j < r && !rank2; ++j)
        if (mod(M[(size_t)i] * M[(size_t)(r + j)] -
                    M[(size_t)j] * M[(size_t)(r + i)],
                p) != 0)
          rank2 = true;
    if (!rank2) continue;
    ++surjections;
    std::vector<long> best;
    for (const auto& g : sl2) {
      std::vector<long> img(2 * (size_t)r);
      for (long j = 0; j < r; ++j) {
        img[(size_t)j] = mod(g[0] * M[(size_t)j] + g[1] * M[(size_t)(r + j)], p);
        img[(size_t)(r + j)] =
            mod(g[2] * M[(size_t)j] + g[3] * M[(size_t)(r + j)], p);
      }
      if (best.empty() || img < best) best = std::move(img);
    }
    orbit_sizes[best]++;
  }
  for (const auto& [rep, size] : orbit_sizes)
    if (size != (long)sl2.size())
      throw FieldError("SL(2, F_p) action is not free on surjections");
  if (surjections != (long)orbit_sizes.size() * (long)sl2.size())
    throw FieldError("orbit count inconsistency");
  return (long)orbit_sizes.size();
}

namespace {

// Normalized covector of a hyperplane.
std::vector<long> hyperplane_covector(const FpSubspace& E) {
  auto ker = fp_kernel(E.basis);
  if (ker.size() != 1) throw FieldError("not a hyperplane");
  std::vector<long> c = ker[0];
  long p = E.p;
  size_t lead = 0;
  while (c[lead] == 0) ++lead;
  long inv = fp_inv(c[lead], p);
  for (auto& x : c) x = mod(x * inv, p);
  return c;
}

// The commutator pairing exponent of the quotient map (phi, phi'):
// sum over handles of det of the images of (a_i, b_i).
long pairing_exponent(const SymplecticSpace& sp, const std::vector<long>& f,
                      const std::vector<long>& f2) {
  long k0 = 0;
  for (long i = 0; i < sp.g; ++i)
    k0 += f[(size_t)(2 * i)] * f2[(size_t)(2 * i + 1)] -
          f[(size_t)(2 * i + 1)] * f2[(size_t)(2 * i)];
  return mod(k0, sp.p);
}

}  // namespace

std::map<long, long> intersection_euler_profile(const SymplecticSpace& sp,
                                                const FpSubspace& E,
                                                const FpSubspace& E2) {
  if (E == E2) throw FieldError("profile requires distinct hyperplanes");
  long p = sp.p;
  auto f = hyperplane_covector(E), f2 = hyperplane_covector(E2);
  long k0 = pairing_exponent(sp, f, f2);
  std::map<long, long> profile;
  for (long k = 0; k < p; ++k) profile[k] = 0;
  for (long d = 1; d < p; ++d) profile[mod(d * k0, p)]++;
  return profile;
}

std::map<long, long> intersection_euler_profile_matrices(
    const SymplecticSpace& sp, const FpSubspace& E, const FpSubspace& E2) {
  if (E == E2) throw FieldError("profile requires distinct hyperplanes");
  long p = sp.p;
  if (p > 5) throw FieldError("matrix route limited to small p");
  auto f = hyperplane_covector(E), f2 = hyperplane_covector(E2);
  ProjMat D = mat_D_xi(p), Mc = mat_Mc(p);
  std::map<long, long> profile;
  for (long k = 0; k < p; ++k) profile[k] = 0;
  for (long d = 1; d < p; ++d) {
    RepAssignment rho;
    rho.pres = Presentation::surface_group(sp.g);
    rho.mc_exponent.assign(sp.dim(), 0);
    for (size_t j = 0; j < sp.dim(); ++j) {
      long u = f[j], v = mod(d * f2[j], p);
      rho.mc_exponent[j] = v;
      rho.images.push_back(D.pow(u) * Mc.pow(v));
    }
    if (!rho.satisfies_relations())
      throw FieldError("abelian representative violates the relator");
    profile[euler_invariant(rho)]++;
  }
  return profile;
}

std::array<CycNum, 4> vogt_coordinates(const CycMat& A, const CycMat& B) {
  if (A.rows != 2 || A.cols != 2 || B.rows != 2 || B.cols != 2)
    throw FieldError("trace coordinates need 2x2 matrices");
  if (!(det(A) == CycNum(1)) || !(det(B) == CycNum(1)))
    throw FieldError("trace coordinates need determinant one");
  auto tr = [](const CycMat& M) { return M.at(0, 0) + M.at(1, 1); };
  CycNum x = tr(A), y = tr(B), z = tr(A * B);
  std::array<CycNum, 4> out{x * x, y * y, z * z, x * y * z};
  if (!(out[3] * out[3] == out[0] * out[1] * out[2]))
    throw FieldError("trace identity violated");
  return out;
}

}  // namespace badlocus
