#include <doctest.h>

#include <random>

#include "badlocus/cyclo.hpp"

using namespace badlocus;

namespace {

CycNum random_elt(long n, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  QPoly c((size_t)phi(n));
  for (auto& x : c) x = Rat(num(rng)) / Rat(den(rng));
  return CycNum::from_coeffs(n, c);
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(phi(1) == 1);
  CHECK(phi(2) == 1);
  CHECK(phi(12) == 4);
  CHECK(phi(30) == 8);

  // Phi_12 = x^4 - x^2 + 1.
  const QPoly& f = cyclotomic_poly(12);
  QPoly want = {Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)};
  CHECK(f == want);

  // prod_{d | n} Phi_d has degree n.
  long deg = 0;
  for (long d = 1; d <= 12; ++d)
    if (12 % d == 0) deg += (long)cyclotomic_poly(d).size() - 1;
  CHECK(deg == 12);
}

TEST_CASE("roots of unity") {
  for (long n : {2, 3, 5, 8, 12}) {
    CycNum z = CycNum::zeta(n, 1);
    CHECK(z.pow(n) == CycNum(1));
    CHECK(z.pow(n - 1) == z.inverse());
    // The full sum of n-th roots of unity vanishes.
    CycNum s;
    for (long k = 0; k < n; ++k) s += CycNum::zeta(n, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(12345);
  for (long n : {5, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycNum a = random_elt(n, rng), b = random_elt(n, rng),
             c = random_elt(n, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == CycNum(0));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == CycNum(1));
        CHECK((a.inverse()).inverse() == a);
      }
    }
  }
  CHECK_THROWS_AS(CycNum(0).inverse(), FieldError);
}

TEST_CASE("reduction and lifting") {
  // zeta_12^2 = zeta_6 = -zeta_3^2 lives in Q(zeta_3) (odd canonical order).
  CycNum z = CycNum::zeta(12, 2);
  CHECK(z.reduced().order() == 3);
  CHECK(z.reduced() == -CycNum::zeta(3, 2));

  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    CycNum a = random_elt(12, rng);
    CHECK(a.lifted_to(24).reduced() == a.reduced());
    CHECK(a.lifted_to(24) == a);  // equality lifts to a common field
  }

  CHECK(CycNum::zeta(5, 0) == CycNum(1));
  CHECK(CycNum(Rat(7, 3)).is_rational());
  CHECK(*CycNum(Rat(7, 3)).to_rational() == Rat(7, 3));
  CHECK_FALSE(CycNum::zeta(5, 1).is_rational());
}

TEST_CASE("root of unity recognition") {
  auto r = CycNum::zeta(8, 3).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(r->first == 8);
  CHECK(r->second == 3);

  r = CycNum(1).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(*r == std::make_pair(1L, 0L));

  r = CycNum(-1).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(*r == std::make_pair(2L, 1L));

  // zeta_12^2 must be recognized in its minimal field.
  r = CycNum::zeta(12, 2).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(*r == std::make_pair(6L, 1L));

  CHECK_FALSE(CycNum(2).as_root_of_unity().has_value());
  CHECK_FALSE((CycNum::zeta(5, 1) + CycNum(1)).as_root_of_unity().has_value());
}

TEST_CASE("p-th roots inside a fixed cyclotomic field") {
  // Rational perfect power.
  auto r = pth_root_in_field(CycNum(32), 5, 5);
  REQUIRE(r.has_value());
  CHECK(r->pow(5) == CycNum(32));

  // Root of unity: zeta_5^2 has a 5th root in Q(zeta_25).
  r = pth_root_in_field(CycNum::zeta(5, 2), 5, 25);
  REQUIRE(r.has_value());
  CHECK(r->pow(5) == CycNum::zeta(5, 2));

  // sqrt(2) does not live in Q(i) ...
  CHECK_FALSE(pth_root_in_field(CycNum(2), 2, 4).has_value());
  // ... but it does live in Q(zeta_8), as zeta_8 + zeta_8^{-1}.
  r = pth_root_in_field(CycNum(2), 2, 8);
  REQUIRE(r.has_value());
  CHECK(r->pow(2) == CycNum(2));

  // Non-trivial algebraic case: s = (1 + zeta_8)^2 has the obvious root.
  CycNum s = (CycNum(1) + CycNum::zeta(8, 1)).pow(2);
  r = pth_root_in_field(s, 2, 8);
  REQUIRE(r.has_value());
  CHECK(r->pow(2) == s);
}
