#include <doctest.h>

#include <random>

#include "badlocus/words.hpp"

using namespace badlocus;

namespace {

Word random_word(size_t len, int ngens, std::mt19937& rng) {
  std::uniform_int_distribution<int> g(1, ngens);
  std::uniform_int_distribution<int> s(0, 1);
  Word w;
  for (size_t i = 0; i < len; ++i) w.push_back(s(rng) ? g(rng) : -g(rng));
  return free_reduce(w);
}

}  // namespace

TEST_CASE("free reduction and word algebra") {
  CHECK(free_reduce({1, -1, 2}) == Word{2});
  CHECK(free_reduce({1, 2, -2, -1}) == Word{});
  Word w = {1, 2, -1};
  CHECK(word_inverse(w) == Word{1, -2, -1});
  CHECK(free_reduce(word_concat(w, word_inverse(w))) == Word{});
  CHECK(word_commutator({1}, {2}) == Word{1, 2, -1, -2});
  CHECK(exponent_sum({1, 2, 1, -2, -1}, 0) == 1);
  CHECK(exponent_sum({1, 2, 1, -2, -1}, 1) == 0);
}

TEST_CASE("standard presentations") {
  Presentation f = Presentation::free_group(3);
  CHECK(f.num_generators == 3);
  CHECK(f.relators.empty());

  Presentation s = Presentation::surface_group(2);
  CHECK(s.num_generators == 4);
  REQUIRE(s.relators.size() == 1);
  // [a1, b1][a2, b2] with generators ordered a1, b1, a2, b2.
  CHECK(s.relators[0] ==
        word_concat(word_commutator({1}, {2}), word_commutator({3}, {4})));

  Presentation m = Presentation::psl2z();
  CHECK(m.num_generators == 2);
  REQUIRE(m.relators.size() == 2);
  CHECK(m.relators[0] == Word{1, 1});
  CHECK(m.relators[1] == Word{2, 2, 2});
}

TEST_CASE("fox derivative basics") {
  // d(x)/dx = 1, d(x^-1)/dx = -x^-1.
  GroupRingElt d = fox_derivative({1}, 0);
  CHECK(d == GroupRingElt{{Word{}, 1}});
  d = fox_derivative({-1}, 0);
  CHECK(d == GroupRingElt{{Word{-1}, -1}});

  // d([a,b])/da = 1 - a b a^{-1}.
  d = fox_derivative(word_commutator({1}, {2}), 0);
  CHECK(d == GroupRingElt{{Word{}, 1}, {Word{1, 2, -1}, -1}});

  // Derivative of a power: d(a^3)/da = 1 + a + a^2.
  d = fox_derivative({1, 1, 1}, 0);
  CHECK(d == GroupRingElt{{Word{}, 1}, {Word{1}, 1}, {Word{1, 1}, 1}});
}

TEST_CASE("fox fundamental identity") {
  // sum_j d(w)/d(x_j) (x_j - 1) = w - 1 in the group ring, checked through
  // exact matrix evaluation.
  std::vector<CycMat> gens = {mat_Mc(3).lift(), mat_D_xi(3).lift()};
  std::mt19937 rng(31);
  CycMat id = CycMat::identity(3);
  for (int trial = 0; trial < 25; ++trial) {
    Word w = random_word(8, 2, rng);
    CycMat lhs(3, 3);
    for (int j = 0; j < 2; ++j) {
      CycMat dj = eval_group_ring(fox_derivative(w, j), gens, 3);
      lhs = lhs + dj * (gens[(size_t)j] - id);
    }
    CHECK(lhs == eval_word(w, gens) - id);
  }
}

TEST_CASE("representation assignments") {
  RepAssignment rho;
  rho.pres = Presentation::psl2z();
  // a -> antidiagonal involution, b -> 3-cycle in PGL(3): order conditions
  // fail for the first, so relations are violated.
  rho.images = {mat_Mc(3), mat_Mc(3)};
  rho.mc_exponent = {1, 1};
  CHECK_FALSE(rho.satisfies_relations());

  RepAssignment ok;
  ok.pres = Presentation::free_group(2);
  ok.images = {mat_Mc(3), mat_D_xi(3)};
  ok.mc_exponent = {1, 0};
  CHECK(ok.satisfies_relations());
  CHECK(ok.eval({1, 2, -1}) == mat_Mc(3) * mat_D_xi(3) * mat_Mc(3).inv());
}
