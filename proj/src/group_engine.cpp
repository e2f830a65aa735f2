#include "badlocus/group_engine.hpp"

#include <numeric>

namespace badlocus {

std::vector<ProjMat> group_closure(const std::vector<ProjMat>& gens,
                                   size_t cap) {
  if (gens.empty()) throw FieldError("closure of empty generating set");
  std::unordered_set<ProjMat, ProjMatHash> seen;
  ProjMat id{CycMat::identity(gens[0].dim())};
  std::vector<ProjMat> queue{id};
  seen.insert(id);
  while (!queue.empty()) {
    ProjMat cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      ProjMat nx = cur * g;
      if (seen.insert(nx).second) {
        if (seen.size() > cap)
          throw ClosureError("group closure exceeded cap of " +
                             std::to_string(cap));
        queue.push_back(std::move(nx));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Echelon-form span tracker for flattened matrices.
struct SpanBasis {
  size_t n;  // vector length
  // rows in echelon form; pivot[i] = leading column of row i
  std::vector<std::vector<CycNum>> rows;
  std::vector<size_t> pivots;

  explicit SpanBasis(size_t n_) : n(n_) {}

  // Returns true if the vector enlarged the span.
  bool insert(std::vector<CycNum> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      if (!v[pivots[r]].is_zero()) {
        CycNum f = v[pivots[r]];
        for (size_t j = 0; j < n; ++j) v[j] -= f * rows[r][j];
      }
    }
    size_t lead = n;
    for (size_t j = 0; j < n; ++j)
      if (!v[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead == n) return false;
    CycNum inv = v[lead].inverse();
    for (size_t j = 0; j < n; ++j) v[j] *= inv;
    // Back-substitute into existing rows.
    for (size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r][lead].is_zero()) {
        CycNum f = rows[r][lead];
        for (size_t j = 0; j < n; ++j) rows[r][j] -= f * v[j];
      }
    }
    rows.push_back(std::move(v));
    pivots.push_back(lead);
    return true;
  }
  size_t dim() const { return rows.size(); }
};

std::vector<CycNum> flatten(const CycMat& m) { return m.a; }

}  // namespace

bool is_irreducible(const std::vector<ProjMat>& gens) {
  size_t p = gens.at(0).dim();
  SpanBasis span(p * p);
  // Saturate the span of all words in the generators, starting from I.
  std::vector<CycMat> frontier{CycMat::identity(p)};
  span.insert(flatten(frontier[0]));
  while (!frontier.empty() && span.dim() < p * p) {
    std::vector<CycMat> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        CycMat prod = w * g.lift();
        if (span.insert(flatten(prod))) next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }
  return span.dim() == p * p;
}

namespace {

// Residual of the twisted intertwining equation X A - omega B X for the
// matrix X given as a flat vector.
std::vector<CycNum> twist_residual(const std::vector<CycNum>& x, size_t p,
                                   const CycMat& A, const CycMat& B,
                                   const CycNum& omega) {
  CycMat X(p, p);
  X.a = x;
  CycMat R = X * A - (B * X).scaled(omega);
  return R.a;
}

// Given a basis of candidate X's, keep the subspace where the residual
// vanishes; returns the new basis.
std::vector<std::vector<CycNum>> restrict_basis(
    const std::vector<std::vector<CycNum>>& basis, size_t p, const CycMat& A,
    const CycMat& B, const CycNum& omega) {
  if (basis.empty()) return {};
  size_t b = basis.size();
  CycMat M(p * p, b);
  for (size_t j = 0; j < b; ++j) {
    auto r = twist_residual(basis[j], p, A, B, omega);
    for (size_t i = 0; i < p * p; ++i) M.at(i, j) = r[i];
  }
  auto ker = kernel_basis(M);
  std::vector<std::vector<CycNum>> out;
  for (const auto& k : ker) {
    std::vector<CycNum> v(p * p, CycNum(0));
    for (size_t j = 0; j < b; ++j) {
      if (k[j].is_zero()) continue;
      for (size_t i = 0; i < p * p; ++i) v[i] += k[j] * basis[j][i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<ProjMat> conjugators_between(const std::vector<ProjMat>& rho,
                                         const std::vector<ProjMat>& rho2) {
  if (rho.size() != rho2.size() || rho.empty())
    throw FieldError("generator image lists must match");
  size_t p = rho[0].dim();
  if (!is_irreducible(rho) || !is_irreducible(rho2))
    throw FieldError("conjugator solving requires irreducible inputs");

  std::vector<CycNum> mu(p);
  for (size_t k = 0; k < p; ++k) mu[k] = CycNum::zeta((long)p, (long)k);

  // Full space basis (standard matrix units).
  std::vector<std::vector<CycNum>> full;
  for (size_t i = 0; i < p * p; ++i) {
    std::vector<CycNum> v(p * p, CycNum(0));
    v[i] = CycNum(1);
    full.push_back(std::move(v));
  }

  std::vector<ProjMat> results;
  // DFS over omega tuples with subspace pruning.
  struct Frame {
    size_t gen;
    std::vector<std::vector<CycNum>> basis;
  };
  std::vector<Frame> stack{{0, full}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.gen == rho.size()) {
      // Schur: at most one projective solution per consistent tuple.
      for (const auto& v : f.basis) {
        CycMat X(p, p);
        X.a = v;
        if (det(X).is_zero()) continue;
        results.push_back(ProjMat(X));
      }
      continue;
    }
    const CycMat& A = rho[f.gen].lift();
    const CycMat& B = rho2[f.gen].lift();
    for (size_t k = 0; k < p; ++k) {
      auto nb = restrict_basis(f.basis, p, A, B, mu[k]);
      if (!nb.empty()) stack.push_back({f.gen + 1, std::move(nb)});
    }
  }
  // Deduplicate projectively (distinct tuples give distinct conjugators, but
  // be defensive).
  std::unordered_set<ProjMat, ProjMatHash> uniq(results.begin(), results.end());
  return {uniq.begin(), uniq.end()};
}

std::vector<ProjMat> centralizer(const std::vector<ProjMat>& gens) {
  auto cents = conjugators_between(gens, gens);
  return group_closure(cents, 100000);
}

GroupVerdict classify_subgroup(const std::vector<ProjMat>& gens) {
  GroupVerdict v;
  if (!is_irreducible(gens)) {
    v.kind = GroupKind::NotIrreducible;
    return v;
  }
  v.centralizer_elements = centralizer(gens);
  size_t p = gens[0].dim();
  size_t n = v.centralizer_elements.size();
  if (n == 1)
    v.kind = GroupKind::GoodIrreducible;
  else if (n == p)
    v.kind = GroupKind::BadNonabelian;
  else if (n == p * p)
    v.kind = GroupKind::BadAbelian;
  else
    throw FieldError("unexpected centralizer order " + std::to_string(n));
  return v;
}

ProjMat conjugate_to_normal_form(const std::vector<ProjMat>& gens) {
  GroupVerdict verdict = classify_subgroup(gens);
  if (verdict.kind != GroupKind::BadNonabelian &&
      verdict.kind != GroupKind::BadAbelian)
    throw FieldError("normal form requires a nontrivial centralizer");
  long p = (long)gens[0].dim();
  CycNum xi = CycNum::zeta(p, 1);

  // Common cyclotomic order of everything in sight.
  long L = p;
  auto absorb = [&](const CycMat& m) {
    for (const auto& x : m.a) L = std::lcm(L, x.reduced().order());
  };
  for (const auto& g : gens) absorb(g.lift());

  for (const auto& u : verdict.centralizer_elements) {
    if (u.is_identity()) continue;
    absorb(u.lift());
    // u^p must be scalar.
    CycMat up = mat_pow(u.lift(), p);
    auto s = up.as_scalar();
    if (!s) continue;
    CycNum sred = s->reduced();
    long Ls = std::lcm(L, sred.order());
    // Eigenvalues of the canonical lift are lambda * xi^i.
    std::optional<CycNum> lambda;
    for (long mult : {1L, p, p * p, 4 * p}) {
      lambda = pth_root_in_field(sred, p, std::lcm(Ls, mult * Ls));
      if (lambda) break;
    }
    if (!lambda) continue;
    // Eigenvectors.
    CycMat P(p, p);
    bool ok = true;
    for (long i = 0; i < p && ok; ++i) {
      CycMat shifted = u.lift();
      CycNum ev = *lambda * xi.pow(i);
      for (long j = 0; j < p; ++j) shifted.at(j, j) -= ev;
      auto ker = kernel_basis(shifted);
      if (ker.size() != 1) {
        ok = false;
        break;
      }
      for (long j = 0; j < p; ++j) P.at(j, i) = ker[0][j];
    }
    if (!ok) continue;
    CycMat Pinv = inverse(P);
    // Conjugated generators must be monomial with single-cycle support.
    std::vector<ProjMat> conj;
    bool monomial = true;
    long layer_gen = -1, layer_val = 0;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      ProjMat c{Pinv * gens[gi].lift() * P};
      auto layer = c.cyclic_layer();
      if (!layer) {
        monomial = false;
        break;
      }
      if (*layer != 0 && layer_gen < 0) {
        layer_gen = (long)gi;
        layer_val = *layer;
      }
      conj.push_back(std::move(c));
    }
    if (!monomial) continue;
    if (layer_gen < 0)
      throw FieldError("diagonal image cannot be irreducible");
    // Element with layer exactly 1.
    long e = 1;
    while ((layer_val * e) % p != 1) ++e;
    ProjMat x = conj[layer_gen].pow(e);
    // x e_i = mu_i e_{i+1}; find the diagonal correction sending x to the
    // standard p-cycle, using a p-th root of the product of the mu_i.
    std::vector<CycNum> muv(p);
    CycNum sigma(1);
    for (long i = 0; i < p; ++i) {
      muv[i] = x.lift().at((i + 1) % p, i);
      sigma *= muv[i];
    }
    sigma = sigma.reduced();
    long L2 = std::lcm(L, sigma.order());
    for (const auto& c : x.lift().a) L2 = std::lcm(L2, c.reduced().order());
    std::optional<CycNum> croot;
    for (long mult : {1L, p, p * p, 4 * p}) {
      croot = pth_root_in_field(sigma, p, std::lcm(L2, mult * L2));
      if (croot) break;
    }
    if (!croot) continue;
    CycMat S(p, p);
    CycNum acc(1);
    for (long i = 0; i < p; ++i) {
      S.at(i, i) = acc;
      acc = acc * (*croot) * muv[i].inverse();
    }
    CycMat total = S * Pinv;
    ProjMat result{total};
    // Verify the postcondition before returning.
    CycMat total_inv = inverse(total);
    for (const auto& g : gens) {
      ProjMat c{total * g.lift() * total_inv};
      if (!c.cyclic_layer())
        throw FieldError("normal form verification failed");
    }
    return result;
  }
  throw FieldError("no usable centralizer element for normal form");
}

}  // namespace badlocus
