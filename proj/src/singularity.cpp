#include "badlocus/singularity.hpp"

#include <algorithm>

#include "badlocus/group_engine.hpp"

namespace badlocus {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

// Minimal generators of the monoid of exponent vectors whose weight sum
// vanishes mod p, weights being vectors (one or two components), enumerated
// up to degree degbound.
long count_min_generators(long p, const std::vector<std::vector<long>>& w,
                          long degbound) {
  size_t n = w.size();
  size_t wc = n == 0 ? 1 : w[0].size();
  std::vector<std::vector<long>> invariants;  // nonzero exponent vectors
  std::vector<long> e(n, 0);
  std::vector<long> acc(wc, 0);

  // Enumerate all exponent vectors of total degree 1..degbound.
  auto enumerate = [&](auto&& self, size_t i, long deg) -> void {
    if (i == n) {
      if (deg == 0) return;
      bool inv = true;
      for (size_t c = 0; c < wc; ++c)
        if (mod(acc[c], p) != 0) inv = false;
      if (inv) invariants.push_back(e);
      return;
    }
    for (long x = 0; x <= degbound - deg; ++x) {
      e[i] = x;
      for (size_t c = 0; c < wc; ++c) acc[c] += x * w[i][c];
      self(self, i + 1, deg + x);
      for (size_t c = 0; c < wc; ++c) acc[c] -= x * w[i][c];
    }
    e[i] = 0;
  };
  enumerate(enumerate, 0, 0);

  // An invariant vector is a generator iff it has no proper nonzero
  // invariant sub-vector.
  long count = 0;
  std::vector<long> u(n, 0);
  for (const auto& M : invariants) {
    bool decomposable = false;
    std::vector<long> part(wc, 0);
    auto sub = [&](auto&& self, size_t i, bool proper_low,
                   bool proper_high) -> void {
      if (decomposable) return;
      if (i == n) {
        if (!proper_low || !proper_high) return;
        bool inv = true;
        for (size_t c = 0; c < wc; ++c)
          if (mod(part[c], p) != 0) inv = false;
        if (inv) decomposable = true;
        return;
      }
      for (long x = 0; x <= M[i]; ++x) {
        for (size_t c = 0; c < wc; ++c) part[c] += x * w[i][c];
        self(self, i + 1, proper_low || x > 0, proper_high || x < M[i]);
        for (size_t c = 0; c < wc; ++c) part[c] -= x * w[i][c];
      }
    };
    sub(sub, 0, false, false);
    if (!decomposable) ++count;
  }
  return count;
}

}  // namespace

long WeightProfile::total() const {
  long n = 0;
  for (long m : multiplicities) n += m;
  return n;
}

long fixed_codim(const WeightProfile& w) {
  long c = 0;
  for (size_t k = 1; k < w.multiplicities.size(); ++k)
    c += w.multiplicities[k];
  return c;
}

long invariant_min_generators(const WeightProfile& w, long bound) {
  if (w.total() > bound)
    throw FieldError("weight profile too large for exact enumeration");
  std::vector<std::vector<long>> weights;
  for (size_t k = 0; k < w.multiplicities.size(); ++k)
    for (long i = 0; i < w.multiplicities[k]; ++i)
      weights.push_back({(long)k});
  return count_min_generators(w.p, weights, w.p);
}

bool is_singular_origin(const WeightProfile& w, long bound) {
  bool by_codim = fixed_codim(w) > 1;
  bool by_generators = invariant_min_generators(w, bound) > w.total();
  if (by_codim != by_generators)
    throw FieldError("singularity criteria disagree");
  return by_codim;
}

long invariant_min_generators_biweight(
    long p, const std::vector<std::pair<long, long>>& weights, long bound) {
  if ((long)weights.size() > bound)
    throw FieldError("weight profile too large for exact enumeration");
  std::vector<std::vector<long>> w;
  for (const auto& [a, b] : weights) w.push_back({a, b});
  return count_min_generators(p, w, p * p);
}

Verdict singular_verdict(long p, const RepAssignment& rho) {
  if ((long)rho.images.at(0).dim() != p)
    throw FieldError("dimension does not match p");
  GroupVerdict cls = classify_subgroup(rho.images);
  switch (cls.kind) {
    case GroupKind::NotIrreducible:
      throw FieldError("verdict requires an irreducible representation");
    case GroupKind::GoodIrreducible:
      return Verdict::Smooth;
    case GroupKind::BadNonabelian: {
      // Weight profile of the cyclic stabilizer on H1 via the adjoint
      // blocks; block k carries weight k.
      std::vector<ProjMat> images = rho.images;
      bool monomial = true;
      for (const auto& g : images)
        if (!g.cyclic_layer()) monomial = false;
      if (!monomial) {
        ProjMat P = conjugate_to_normal_form(images);
        ProjMat Pi = P.inv();
        for (auto& g : images) g = P * g * Pi;
      }
      auto blocks = ad_blocks(images);
      WeightProfile w;
      w.p = p;
      for (long k = 0; k < p; ++k)
        w.multiplicities.push_back(
            (long)cocycle_dims(rho.pres, blocks[(size_t)k]).dim_H1);
      return is_singular_origin(w, std::max(12L, w.total()))
                 ? Verdict::AlgebraicSingularity
                 : Verdict::Smooth;
    }
    case GroupKind::BadAbelian: {
      // Image inside the standard abelian pair: read off the exponents.
      ProjMat D = mat_D_xi(p), Mc = mat_Mc(p);
      std::vector<std::pair<long, long>> uv;
      for (const auto& g : rho.images) {
        bool ok = false;
        for (long u = 0; u < p && !ok; ++u)
          for (long v = 0; v < p && !ok; ++v)
            if (g == D.pow(u) * Mc.pow(v)) {
              uv.emplace_back(u, v);
              ok = true;
            }
        if (!ok)
          throw FieldError(
              "unsupported stabilizer: abelian image not in standard form");
      }
      // One character of the image per nonzero basis class (s,t) of sl_p;
      // its stabilizer biweight is (t, -s).
      std::vector<std::pair<long, long>> biweights;
      for (long s = 0; s < p; ++s)
        for (long t = 0; t < p; ++t) {
          if (s == 0 && t == 0) continue;
          std::vector<CycMat> alpha;
          for (const auto& [u, v] : uv) {
            CycMat c(1, 1);
            c.at(0, 0) = CycNum::zeta(p, mod(u * t - v * s, p));
            alpha.push_back(std::move(c));
          }
          size_t h1 = cocycle_dims(rho.pres, alpha).dim_H1;
          for (size_t i = 0; i < h1; ++i)
            biweights.emplace_back(t, mod(-s, p));
        }
      long N = (long)biweights.size();
      return invariant_min_generators_biweight(p, biweights,
                                               std::max(12L, N)) > N
                 ? Verdict::AlgebraicSingularity
                 : Verdict::Smooth;
    }
  }
  throw FieldError("unreachable");
}

Psl2zReport psl2z_report(long p) {
  if (p > 7) throw FieldError("modular-group sweep supports p <= 7");
  Psl2zReport rep;
  rep.p = p;
  Presentation pres = Presentation::psl2z();
  // Abelianization from the relator exponent matrix.
  IntMat E(pres.relators.size(), pres.num_generators);
  for (size_t r = 0; r < pres.relators.size(); ++r)
    for (size_t j = 0; j < pres.num_generators; ++j)
      E.at(r, j) = exponent_sum(pres.relators[r], (int)j);
  IntMat Et(pres.num_generators, pres.relators.size());
  for (size_t i = 0; i < E.rows; ++i)
    for (size_t j = 0; j < E.cols; ++j) Et.at(j, i) = E.at(i, j);
  for (const auto& d : quotient_invariants(Et))
    rep.abelianization.push_back((long)d.get_si());
  // An index-p kernel class exists iff the abelianization surjects onto Z/p.
  bool surjects = false;
  for (long d : rep.abelianization)
    if (d % p == 0) surjects = true;
  rep.locus_empty = !surjects;
  if (rep.locus_empty) return rep;

  RepAssignment beta;
  beta.pres = pres;
  beta.mc_exponent = {0, 0};
  if (p == 3) {
    CycMat a(3, 3);
    a.at(0, 0) = CycNum(-1);
    a.at(1, 1) = CycNum(-1);
    a.at(2, 2) = CycNum(1);
    beta.images = {ProjMat(a), mat_Mc(3)};
    beta.mc_exponent = {0, 1};
  } else {  // p == 2
    beta.images = {mat_Mc(2), mat_torsion_diag(2, 3, {0, 1})};
    beta.mc_exponent = {1, 0};
  }
  if (!beta.satisfies_relations())
    throw FieldError("modular-group representative violates relators");

  auto blocks = ad_blocks(beta.images);
  for (long k = 1; k < p; ++k)
    rep.block_h1.push_back(
        (long)cocycle_dims(pres, blocks[(size_t)k]).dim_H1);
  rep.verdict = singular_verdict(p, beta);
  return rep;
}

}  // namespace badlocus
