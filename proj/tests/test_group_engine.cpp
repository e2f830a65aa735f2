#include <doctest.h>

#include <unordered_set>

#include "badlocus/group_engine.hpp"

using namespace badlocus;

namespace {

// Unipotent upper/lower pair: irreducible with trivial centralizer.
std::vector<ProjMat> good_pair(long p) {
  CycMat u((size_t)p, (size_t)p), l((size_t)p, (size_t)p);
  for (long i = 0; i < p; ++i) {
    u.at(i, i) = CycNum(1);
    l.at(i, i) = CycNum(1);
    if (i + 1 < p) {
      u.at(i, i + 1) = CycNum(1);
      l.at(i + 1, i) = CycNum(1);
    }
  }
  return {ProjMat(u), ProjMat(l)};
}

bool same_element_set(const std::vector<ProjMat>& a,
                      const std::vector<ProjMat>& b) {
  std::unordered_set<ProjMat, ProjMatHash> sa(a.begin(), a.end());
  std::unordered_set<ProjMat, ProjMatHash> sb(b.begin(), b.end());
  return sa == sb;
}

}  // namespace

TEST_CASE("group closure") {
  CHECK(group_closure({mat_Mc(3)}).size() == 3);
  CHECK(group_closure({mat_D_xi(5)}).size() == 5);
  // <D(xi), M_c> has order p^2 in PGL(p).
  for (long p : {2, 3, 5})
    CHECK(group_closure({mat_D_xi(p), mat_Mc(p)}).size() ==
          (size_t)(p * p));
  // Infinite groups hit the cap.
  CHECK_THROWS_AS(group_closure(good_pair(2), 50), ClosureError);
}

TEST_CASE("irreducibility") {
  for (long p : {2, 3, 5}) {
    CHECK(is_irreducible({mat_D_xi(p), mat_Mc(p)}));
    CHECK(is_irreducible(good_pair(p)));
    CHECK_FALSE(is_irreducible({mat_D_xi(p)}));
    CHECK_FALSE(is_irreducible({mat_Mc(p)}));
  }
}

TEST_CASE("centralizers of standard subgroups") {
  // Abelian bad: centralizer is the group itself, order p^2.
  for (long p : {2, 3}) {
    auto cent = centralizer({mat_D_xi(p), mat_Mc(p)});
    CHECK(cent.size() == (size_t)(p * p));
    CHECK(same_element_set(cent,
                           group_closure({mat_D_xi(p), mat_Mc(p)})));
  }

  // Nonabelian bad: centralizer is <D(xi)>, order p.
  auto cent = centralizer({mat_Mc(3), mat_torsion_diag(3, 9, {0, 1, 0})});
  std::vector<ProjMat> dxi;
  for (long j = 0; j < 3; ++j) dxi.push_back(mat_D_xi(3).pow(j));
  CHECK(same_element_set(cent, dxi));

  // Good: trivial centralizer.
  CHECK(centralizer(good_pair(3)).size() == 1);
}

TEST_CASE("classification of irreducible subgroups") {
  CHECK(classify_subgroup({mat_D_xi(3)}).kind == GroupKind::NotIrreducible);
  CHECK(classify_subgroup(good_pair(2)).kind == GroupKind::GoodIrreducible);
  CHECK(classify_subgroup({mat_D_xi(3), mat_Mc(3)}).kind ==
        GroupKind::BadAbelian);
  CHECK(classify_subgroup({mat_Mc(3), mat_torsion_diag(3, 9, {0, 1, 0})})
            .kind == GroupKind::BadNonabelian);
  CHECK(classify_subgroup({mat_Mc(2), mat_torsion_diag(2, 4, {0, 1})}).kind ==
        GroupKind::BadNonabelian);
}

TEST_CASE("conjugators between standard representations") {
  // Self-conjugators of the abelian bad pair: the group itself (p^2 of them).
  std::vector<ProjMat> rho = {mat_D_xi(3), mat_Mc(3)};
  auto c = conjugators_between(rho, rho);
  CHECK(c.size() == 9);
  for (const auto& g : c) {
    CHECK(g.is_monomial());
    CHECK(g.cyclic_layer().has_value());
    for (const auto& h : rho) {
      // Conjugation permutes the generators projectively up to scalars; on
      // this pair each generator is actually fixed.
      CHECK(g * h * g.inv() == h);
    }
  }

  // A good pair admits only the identity self-conjugator.
  CHECK(conjugators_between(good_pair(2), good_pair(2)).size() == 1);

  // Distinct-generator fibers: D(xi) vs its square are conjugate inside the
  // normalizer together with M_c.
  std::vector<ProjMat> rho2 = {mat_D_xi(3).pow(2), mat_Mc(3)};
  for (const auto& g : conjugators_between(rho, rho2)) {
    CHECK(g * rho[0] * g.inv() == rho2[0]);
    CHECK(g * rho[1] * g.inv() == rho2[1]);
  }
}

TEST_CASE("reduction to monomial normal form") {
  // Conjugate a standard bad subgroup by a rational matrix, then recover a
  // conjugation back to monomial form.
  CycMat q(3, 3);
  long vals[3][3] = {{1, 2, 0}, {0, 1, 1}, {1, 0, 1}};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) q.at(i, j) = CycNum(vals[i][j]);
  ProjMat pq(q), pqi = pq.inv();

  for (std::vector<ProjMat> gens :
       {std::vector<ProjMat>{mat_Mc(3), mat_torsion_diag(3, 9, {0, 1, 0})},
        std::vector<ProjMat>{mat_Mc(3), mat_torsion_diag(3, 6, {0, 1, 3})},
        std::vector<ProjMat>{mat_D_xi(3), mat_Mc(3)}}) {
    std::vector<ProjMat> twisted;
    for (const auto& h : gens) twisted.push_back(pq * h * pqi);
    ProjMat g = conjugate_to_normal_form(twisted);
    std::vector<ProjMat> back;
    for (const auto& h : twisted) back.push_back(g * h * g.inv());
    for (const auto& h : back) {
      CHECK(h.is_monomial());
      CHECK(h.cyclic_layer().has_value());
    }
    // The standard p-cycle lies in the normalized group.
    bool found = false;
    for (const auto& h : group_closure(back))
      if (h == mat_Mc(3)) found = true;
    CHECK(found);
  }
}
