#pragma once

// Free-group words, finite presentations, and Fox derivatives.

#include <map>
#include <string>
#include <vector>

#include "badlocus/proj_matrix.hpp"

namespace badlocus {

// A word in generators x_0..x_{n-1}: letters +-(i+1) for x_i^{+-1}.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
// [a, b] = a b a^-1 b^-1
Word word_commutator(const Word& a, const Word& b);
long exponent_sum(const Word& w, int gen);

struct Presentation {
  size_t num_generators = 0;
  std::vector<Word> relators;

  static Presentation free_group(size_t rank);
  // <a_1, b_1, .., a_g, b_g | prod [a_i, b_i]>, generators ordered
  // a_1, b_1, a_2, b_2, ...
  static Presentation surface_group(long genus);
  // <a, b | a^2, b^3>
  static Presentation psl2z();
};

// An element of the integral group ring Z[F_n], stored as reduced words with
// integer coefficients.
using GroupRingElt = std::map<Word, long>;

// Fox derivative d(w)/d(x_gen), gen 0-based:
//   d(x)/d(x) = 1, d(x^-1)/d(x) = -x^-1, d(uv)/dx = du/dx + u dv/dx.
GroupRingElt fox_derivative(const Word& w, int gen);

// A representation given by generator images.
struct RepAssignment {
  Presentation pres;
  std::vector<ProjMat> images;
  // Exponent of the p-cycle layer of each (monomial) generator image; the
  // composite of the representation with the layer map.
  std::vector<long> mc_exponent;

  ProjMat eval(const Word& w) const;
  // Check each relator maps to the projective identity.
  bool satisfies_relations() const;
};

// Evaluate a word through generator matrices (plain lifts, no projective
// normalization), so scalar bookkeeping is preserved.
CycMat eval_word(const Word& w, const std::vector<CycMat>& gens);
// Linear extension of eval_word to group ring elements.
CycMat eval_group_ring(const GroupRingElt& e, const std::vector<CycMat>& gens,
                       size_t dim);

}  // namespace badlocus
