// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every comparison is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <unordered_set>
#include <vector>

#include "badlocus/group_engine.hpp"
#include "badlocus/pseudo.hpp"
#include "badlocus/singularity.hpp"
#include "sample_reps.hpp"

using namespace badlocus;
using namespace badlocus::testing;

namespace {

bool same_element_set(const std::vector<ProjMat>& a,
                      const std::vector<ProjMat>& b) {
  std::unordered_set<ProjMat, ProjMatHash> sa(a.begin(), a.end());
  std::unordered_set<ProjMat, ProjMatHash> sb(b.begin(), b.end());
  return sa == sb;
}

// 1. Commutator identities [D(xi), M_c^k] = xi^k I.
bool criterion1() {
  for (long p : {2, 3, 5, 7}) {
    ProjMat d = mat_D_xi(p), mc = mat_Mc(p);
    for (long k = 0; k < p; ++k)
      if (scalar_commutator(d, mc.pow(k)) != std::optional<long>(k))
        return false;
  }
  return true;
}

// 2. Centralizer sweep over nontrivial shift-invariant diagonal subgroups.
bool criterion2() {
  for (long p : {2, 3, 5})
    for (long m : {p, 2 * p}) {
      DiagSubgroup dxi =
          subgroup_generated_by(p, m, {TorsionDiag::d_xi(p, m)});
      for (const auto& k : invariant_subgroups(p, m)) {
        if (k.order == 1) continue;
        std::vector<ProjMat> gens;
        for (const auto& g : k.generators) gens.push_back(g.to_projmat());
        gens.push_back(mat_Mc(p));
        auto cent = centralizer(gens);
        if (k == dxi) {
          if (cent.size() != (size_t)(p * p)) return false;
          if (!same_element_set(cent, group_closure(gens))) return false;
        } else {
          std::vector<ProjMat> dpow;
          for (long j = 0; j < p; ++j) dpow.push_back(mat_D_xi(p).pow(j));
          if (!same_element_set(cent, dpow)) return false;
        }
      }
    }
  return true;
}

// 3. Normalizer action of the Vandermonde and theta-diagonal matrices.
bool criterion3() {
  for (long p : {3, 5, 7}) {
    ProjMat d = mat_D_xi(p), mc = mat_Mc(p);
    if (!(vandermonde(p) * d * vandermonde(p).inv() == mc.inv()))
      return false;
    if (!(mat_S(p) * mc * mat_S(p).inv() == d * mc)) return false;
  }
  return true;
}

// 4. Component counts against brute-force oracles.
bool criterion4() {
  for (auto [p, r] : std::vector<std::pair<long, long>>{
           {2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
    if (count_pseudo_components(p, r) !=
        (long)hyperplanes(p, (size_t)r).size())
      return false;
    if (count_abelian_irreducible(p, r) != abelian_irreducible_oracle(p, r))
      return false;
    if (intersection_count(p) != p - 1) return false;
    // Hyperplanes through the kernel of a fixed surjection to F_p^2.
    FpMat surj(p, 2, (size_t)r);
    surj.at(0, 0) = 1;
    surj.at(1, 1) = 1;
    auto kb = fp_kernel(surj);
    long through = 0;
    for (const auto& h : hyperplanes(p, (size_t)r)) {
      bool all = true;
      for (const auto& v : kb)
        if (!h.contains(v)) all = false;
      if (all) ++through;
    }
    if (through != components_through_abelian(p)) return false;
  }
  return count_pseudo_components(2, 2) == 3 &&
         count_abelian_irreducible(2, 2) == 1;
}

// 5. Two symplectic orbits on distinct hyperplane pairs, labeled by the
// degeneracy of the intersection.
bool criterion5() {
  for (long p : {2, 3}) {
    SymplecticSpace sp{p, 2};
    if (sp_orbit_count_on_hyperplane_pairs(sp) != 2) return false;
    // Both labels occur.
    auto hs = hyperplanes(p, sp.dim());
    std::unordered_set<long> labels;
    for (size_t i = 0; i < hs.size(); ++i)
      for (size_t j = i + 1; j < hs.size(); ++j)
        labels.insert(pair_degeneracy(sp, hs[i], hs[j]));
    if (labels != std::unordered_set<long>{0, 2}) return false;
  }
  return true;
}

// 6. Euler-class profiles of pseudo-component intersections.
bool criterion6() {
  for (long p : {2, 3, 5})
    for (long g : {2, 3}) {
      SymplecticSpace sp{p, g};
      size_t n = sp.dim();
      // Normal-form pairs: E = {y1 = 0}, E' = {x1 = 0} intersect in the
      // nondegenerate span of the remaining handles; E = {y1 = 0},
      // E' = {y2 = 0} intersect with radical span(x1, x2).
      auto coord_hyperplane = [&](size_t skip) {
        std::vector<std::vector<long>> rows;
        for (size_t i = 0; i < n; ++i) {
          if (i == skip) continue;
          std::vector<long> v(n, 0);
          v[i] = 1;
          rows.push_back(v);
        }
        return FpSubspace::span(p, n, rows);
      };
      FpSubspace ey1 = coord_hyperplane(1), ex1 = coord_hyperplane(0),
                 ey2 = coord_hyperplane(3);
      if (pair_degeneracy(sp, ey1, ex1) != 0) return false;
      if (pair_degeneracy(sp, ey1, ey2) != 2) return false;
      std::map<long, long> want_nd, want_dg;
      for (long k = 0; k < p; ++k) {
        want_nd[k] = k == 0 ? 0 : 1;
        want_dg[k] = k == 0 ? p - 1 : 0;
      }
      if (intersection_euler_profile(sp, ey1, ex1) != want_nd) return false;
      if (intersection_euler_profile(sp, ey1, ey2) != want_dg) return false;
    }
  return true;
}

// 7. Fox-calculus cohomology dimensions of the adjoint blocks.
bool criterion7() {
  for (long p : {2, 3}) {
    for (long r : {2, 3}) {
      auto rho = sample_bad_free(p, r, true);
      auto blocks = ad_blocks(rho.images);
      size_t total = 0;
      for (long k = 0; k < p; ++k) {
        size_t h1 =
            cocycle_dims(rho.pres, blocks[(size_t)k]).dim_H1;
        if (k != 0 && h1 != (size_t)((r - 1) * p)) return false;
        total += h1;
      }
      if (total != (size_t)((r - 1) * (p * p - 1))) return false;
    }
    auto srf = sample_bad_surface(p, 2, true);
    auto blocks = ad_blocks(srf.images);
    for (long k = 1; k < p; ++k)
      if (cocycle_dims(srf.pres, blocks[(size_t)k]).dim_H1 !=
          (size_t)(2 * p))
        return false;
  }
  return true;
}

// 8. Finite-level torsion cohomology invariant factors.
bool criterion8() {
  for (auto [p, m] :
       std::vector<std::pair<long, long>>{{2, 2}, {2, 4}, {3, 3}}) {
    for (long l : {2, 3}) {
      std::vector<long> rhobar((size_t)l, 0);
      rhobar[0] = 1;
      auto th = torsion_h1(Presentation::free_group((size_t)l), rhobar, p, m);
      if (th.invariants !=
          std::vector<long>((size_t)((p - 1) * (l - 1)), m))
        return false;
    }
    for (long g : {2, 3}) {
      std::vector<long> rhobar(2 * (size_t)g, 0);
      rhobar[0] = 1;
      auto th = torsion_h1(Presentation::surface_group(g), rhobar, p, m);
      std::vector<long> want{p};
      for (long i = 0; i < (p - 1) * 2 * (g - 1); ++i) want.push_back(m);
      std::sort(want.begin(), want.end());
      if (th.invariants != want) return false;
    }
    // Cyclic-group oracle on <t | t^p> with the full module.
    Presentation cyc;
    cyc.num_generators = 1;
    cyc.relators = {Word((size_t)p, 1)};
    auto full = torsion_h1(cyc, {1}, p, m, true);
    if (full.invariants != cyclic_h1_oracle(p, m, true)) return false;
    if (!full.invariants.empty()) return false;
  }
  return true;
}

// 9. Singular locus of the modular-group character variety.
bool criterion9() {
  auto r2 = psl2z_report(2);
  if (r2.locus_empty || r2.verdict != Verdict::Smooth) return false;
  if (r2.block_h1 != std::vector<long>{1}) return false;
  auto r3 = psl2z_report(3);
  if (r3.locus_empty || r3.verdict != Verdict::AlgebraicSingularity)
    return false;
  if (r3.block_h1 != std::vector<long>{1, 1}) return false;
  return psl2z_report(5).locus_empty && psl2z_report(7).locus_empty;
}

// 10. Singularity verdicts for constructed classes.
bool criterion10() {
  for (long p : {2, 3}) {
    for (long l : {2, 3})
      if (singular_verdict(p, sample_bad_free(p, l, true)) !=
          Verdict::AlgebraicSingularity)
        return false;
    if (singular_verdict(p, sample_bad_surface(p, 2, true)) !=
        Verdict::AlgebraicSingularity)
      return false;
    // Trivial-centralizer inputs are smooth.
    RepAssignment good;
    good.pres = Presentation::free_group(2);
    good.images = good_generator_pair(p);
    good.mc_exponent = {0, 0};
    if (singular_verdict(p, good) != Verdict::Smooth) return false;
  }
  // Z/3 x Z/3 with an abelian irreducible image: H1 = 0, smooth.
  Presentation P;
  P.num_generators = 2;
  P.relators = {Word{1, 1, 1}, Word{2, 2, 2}, word_commutator({1}, {2})};
  RepAssignment rho;
  rho.pres = P;
  rho.images = {mat_D_xi(3), mat_Mc(3)};
  rho.mc_exponent = {0, 1};
  auto blocks = ad_blocks(rho.images);
  size_t h1 = 0;
  for (const auto& b : blocks) h1 += cocycle_dims(P, b).dim_H1;
  return h1 == 0 && singular_verdict(3, rho) == Verdict::Smooth;
}

// 11. Trace coordinates: T^2 = XYZ, constructor outputs on coordinate lines,
// the abelian irreducible pair at the origin.
bool criterion11() {
  std::mt19937 rng(61);
  std::uniform_int_distribution<long> c(-4, 4);
  auto rand_sl2 = [&]() {
    CycMat m = CycMat::identity(2);
    for (int step = 0; step < 5; ++step) {
      CycMat e = CycMat::identity(2);
      if (step % 2 == 0)
        e.at(0, 1) = CycNum(c(rng));
      else
        e.at(1, 0) = CycNum(c(rng));
      m = m * e;
    }
    return m;
  };
  for (int trial = 0; trial < 100; ++trial) {
    auto v = vogt_coordinates(rand_sl2(), rand_sl2());
    if (!(v[3] * v[3] == v[0] * v[1] * v[2])) return false;
  }

  // Determinant-1 lift of a canonical 2x2 projective class.
  auto unit_lift = [](const ProjMat& g) {
    CycMat m = g.lift();
    CycNum d = det(m);
    auto root = pth_root_in_field(d.inverse(), 2, 8 * d.order());
    if (!root) throw FieldError("no determinant-1 lift in the tested field");
    return m.scaled(*root);
  };

  // Nonabelian bad constructor output: x1 -> M_c, x2 -> diag(1, i); the
  // class lands on the Y-coordinate line X = Z = T = 0, Y != 0.
  auto nab = build_free_bad_rep(2, 2, {TorsionDiag(2, 4, {0, 1})});
  auto v = vogt_coordinates(unit_lift(nab.images[0]), unit_lift(nab.images[1]));
  if (!v[0].is_zero() || v[1].is_zero() || !v[2].is_zero() || !v[3].is_zero())
    return false;

  // Abelian irreducible pair (D(xi), M_c): the origin.
  auto ab = vogt_coordinates(unit_lift(mat_D_xi(2)), unit_lift(mat_Mc(2)));
  for (int i = 0; i < 4; ++i)
    if (!ab[(size_t)i].is_zero()) return false;
  return true;
}

// 12. Conjugators between same-fiber bad representations are monomial with
// cyclic-shift support.
bool criterion12() {
  std::mt19937 rng(62);
  int done = 0;
  while (done < 50) {
    long p = done % 2 == 0 ? 2 : 3;
    std::uniform_int_distribution<long> d(0, p * p - 1);
    auto rand_data = [&]() {
      std::vector<long> e((size_t)p);
      for (auto& x : e) x = d(rng);
      return TorsionDiag(p, p * p, e);
    };
    auto r1 = build_free_bad_rep(p, 2, {rand_data()});
    auto r2 = build_free_bad_rep(p, 2, {rand_data()});
    if (!is_irreducible(r1.images) || !is_irreducible(r2.images)) continue;
    for (const auto& g : conjugators_between(r1.images, r2.images))
      if (!g.is_monomial() || !g.cyclic_layer().has_value()) return false;
    ++done;
  }
  return true;
}

// 13. Equivalence of the codimension and minimal-generator criteria,
// exhaustively over weight profiles with N <= 8.
bool criterion13() {
  for (long p : {2, 3, 5}) {
    std::vector<long> mult((size_t)p, 0);
    bool ok = true;
    std::function<void(size_t, long)> sweep = [&](size_t i, long left) {
      if (!ok) return;
      if (i == mult.size()) {
        WeightProfile w{p, mult};
        // is_singular_origin throws if the two criteria disagree.
        try {
          is_singular_origin(w);
        } catch (const FieldError&) {
          ok = false;
        }
        return;
      }
      for (long v = 0; v <= left; ++v) {
        mult[i] = v;
        sweep(i + 1, left - v);
      }
      mult[i] = 0;
    };
    sweep(0, 8);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)();
  };
  const Criterion table[] = {
      {"criterion 1: commutator identities", criterion1},
      {"criterion 2: centralizer sweep over invariant subgroups", criterion2},
      {"criterion 3: normalizer action", criterion3},
      {"criterion 4: component counts vs oracles", criterion4},
      {"criterion 5: symplectic orbits on hyperplane pairs", criterion5},
      {"criterion 6: intersection Euler profiles", criterion6},
      {"criterion 7: adjoint-block cohomology dimensions", criterion7},
      {"criterion 8: torsion cohomology invariant factors", criterion8},
      {"criterion 9: modular-group singular locus", criterion9},
      {"criterion 10: singularity verdicts", criterion10},
      {"criterion 11: trace coordinates", criterion11},
      {"criterion 12: same-fiber conjugators are monomial", criterion12},
      {"criterion 13: singularity criterion equivalence", criterion13},
  };
  bool all = true;
  for (const auto& c : table) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.run();
    } catch (const std::exception& e) {
      std::printf("[FAIL] %s: exception: %s\n", c.name, e.what());
      all = false;
      continue;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("[%s] %s (%lld ms)\n", pass ? "PASS" : "FAIL", c.name,
                (long long)ms);
    all &= pass;
  }
  std::printf("%s\n", all ? "all criteria passed" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
