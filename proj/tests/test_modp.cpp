#include <doctest.h>

#include <random>

#include "badlocus/modp.hpp"

using namespace badlocus;

namespace {

IntMat random_int_mat(size_t r, size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  IntMat m(r, c);
  for (auto& x : m.a) x = d(rng);
  return m;
}

bool same_entries(const IntMat& a, const IntMat& b) {
  return a.rows == b.rows && a.cols == b.cols && a.a == b.a;
}

// The symplectic transvection x -> x + omega(x, v) v applied to a subspace.
FpSubspace transvect(const SymplecticSpace& sp, const FpSubspace& e,
                     const std::vector<long>& v) {
  std::vector<std::vector<long>> rows;
  for (size_t i = 0; i < e.basis.rows; ++i) {
    std::vector<long> x(e.ambient);
    for (size_t j = 0; j < e.ambient; ++j) x[j] = e.basis.at(i, j);
    long c = sp.form(x, v);
    for (size_t j = 0; j < e.ambient; ++j)
      x[j] = ((x[j] + c * v[j]) % sp.p + sp.p) % sp.p;
    rows.push_back(x);
  }
  return FpSubspace::span(e.p, e.ambient, rows);
}

}  // namespace

TEST_CASE("arithmetic and row reduction over F_p") {
  for (long p : {2, 3, 5, 7})
    for (long a = 1; a < p; ++a) CHECK(a * fp_inv(a, p) % p == 1);

  FpMat m(3, 2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 0;
  m.at(1, 0) = 2;
  m.at(1, 1) = 1;
  m.at(1, 2) = 0;
  // Row 2 = 2 * row 1 over F_3.
  CHECK(fp_rank(m) == 1);
  auto ker = fp_kernel(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker)
    for (size_t i = 0; i < m.rows; ++i) {
      long s = 0;
      for (size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
      CHECK(s % 3 == 0);
    }
}

TEST_CASE("hyperplane enumeration") {
  for (auto [p, r] : std::vector<std::pair<long, size_t>>{
           {2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
    auto hs = hyperplanes(p, r);
    long want = 1;
    for (size_t i = 0; i < r; ++i) want *= p;
    CHECK((long)hs.size() == (want - 1) / (p - 1));
    for (size_t i = 0; i < hs.size(); ++i) {
      CHECK(hs[i].dim() == r - 1);
      for (size_t j = i + 1; j < hs.size(); ++j) CHECK(!(hs[i] == hs[j]));
    }
  }
}

TEST_CASE("subspace span, contains and intersection") {
  FpSubspace e = FpSubspace::span(3, 3, {{1, 0, 2}, {0, 1, 1}});
  CHECK(e.dim() == 2);
  CHECK(e.contains({1, 1, 0}));
  CHECK_FALSE(e.contains({0, 0, 1}));
  FpSubspace f = FpSubspace::span(3, 3, {{1, 0, 2}, {0, 0, 1}});
  FpSubspace i = intersect(e, f);
  CHECK(i.dim() == 1);
  CHECK(i.contains({1, 0, 2}));
}

TEST_CASE("smith normal form") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    IntMat a = random_int_mat(3, 4, rng);
    SnfResult s = smith_normal_form(a);
    CHECK(same_entries(s.U * a * s.V, s.D));
    for (size_t i = 0; i + 1 < s.invariants.size(); ++i)
      CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
    // U and V are unimodular: their own invariant factors are all 1.
    for (const auto& d : smith_normal_form(s.U).invariants)
      CHECK(d == 1);
    for (const auto& d : smith_normal_form(s.V).invariants)
      CHECK(d == 1);
  }

  IntMat k(2, 2);
  k.at(0, 0) = 2;
  k.at(0, 1) = 4;
  k.at(1, 0) = 6;
  k.at(1, 1) = 8;
  auto inv = smith_normal_form(k).invariants;
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == 2);
  CHECK(inv[1] == 4);
}

TEST_CASE("integer kernels and quotient invariants") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    IntMat a = random_int_mat(2, 4, rng);
    auto ker = int_kernel(a);
    for (const auto& v : ker)
      for (size_t i = 0; i < a.rows; ++i) {
        mpz_class s = 0;
        for (size_t j = 0; j < a.cols; ++j) s += a.at(i, j) * v[j];
        CHECK(s == 0);
      }
    CHECK(ker.size() == a.cols - smith_normal_form(a).invariants.size());
  }

  IntMat d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 4;
  auto q = quotient_invariants(d);
  REQUIRE(q.size() == 2);
  CHECK(q[0] == 2);
  CHECK(q[1] == 4);
  CHECK(quotient_invariants(IntMat::identity(3)).empty());
}

TEST_CASE("symplectic group orders") {
  CHECK(symplectic_group_order(SymplecticSpace{2, 1}, 100000) == 6);
  CHECK(symplectic_group_order(SymplecticSpace{3, 1}, 100000) == 24);
  CHECK(symplectic_group_order(SymplecticSpace{2, 2}, 100000) == 720);
  CHECK(symplectic_group_order(SymplecticSpace{3, 2}, 100000) == 51840);
}

TEST_CASE("pair degeneracy is a symplectic invariant") {
  std::mt19937 rng(23);
  for (long p : {2, 3}) {
    SymplecticSpace sp{p, 2};
    auto hs = hyperplanes(p, sp.dim());
    std::uniform_int_distribution<size_t> pick(0, hs.size() - 1);
    std::uniform_int_distribution<long> coeff(0, p - 1);
    for (int trial = 0; trial < 50; ++trial) {
      size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      FpSubspace e = hs[i], f = hs[j];
      long d = pair_degeneracy(sp, e, f);
      CHECK((d == 0 || d == 2));
      // Apply a random product of transvections to both hyperplanes.
      for (int step = 0; step < 4; ++step) {
        std::vector<long> v(sp.dim());
        bool nz = false;
        for (auto& x : v) nz |= (x = coeff(rng)) != 0;
        if (!nz) continue;
        e = transvect(sp, e, v);
        f = transvect(sp, f, v);
      }
      CHECK(pair_degeneracy(sp, e, f) == d);
    }
  }
}

TEST_CASE("two symplectic orbits on hyperplane pairs") {
  CHECK(sp_orbit_count_on_hyperplane_pairs(SymplecticSpace{2, 2}) == 2);
  CHECK(sp_orbit_count_on_hyperplane_pairs(SymplecticSpace{3, 2}) == 2);
}

TEST_CASE("companion hyperplane of the opposite degeneracy type") {
  SymplecticSpace sp{2, 2};
  auto hs = hyperplanes(2, sp.dim());
  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = i + 1; j < hs.size(); ++j) {
      long d = pair_degeneracy(sp, hs[i], hs[j]);
      FpSubspace e0 = find_E0(sp, hs[i], hs[j]);
      CHECK(!(e0 == hs[i]));
      CHECK(!(e0 == hs[j]));
      long want = d == 0 ? 2 : 0;
      CHECK(pair_degeneracy(sp, hs[i], e0) == want);
      CHECK(pair_degeneracy(sp, hs[j], e0) == want);
    }
}
