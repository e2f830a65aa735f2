#include "badlocus/words.hpp"

namespace badlocus {

Word free_reduce(Word w) {
  Word out;
  for (int c : w) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word word_commutator(const Word& a, const Word& b) {
  return word_concat(word_concat(a, b),
                     word_concat(word_inverse(a), word_inverse(b)));
}

long exponent_sum(const Word& w, int gen) {
  long s = 0;
  for (int c : w) {
    if (c == gen + 1) ++s;
    if (c == -(gen + 1)) --s;
  }
  return s;
}

Presentation Presentation::free_group(size_t rank) {
  Presentation p;
  p.num_generators = rank;
  return p;
}

Presentation Presentation::surface_group(long genus) {
  Presentation p;
  p.num_generators = 2 * (size_t)genus;
  Word rel;
  for (long i = 0; i < genus; ++i) {
    Word a{2 * (int)i + 1}, b{2 * (int)i + 2};
    rel = word_concat(rel, word_commutator(a, b));
  }
  p.relators.push_back(rel);
  return p;
}

Presentation Presentation::psl2z() {
  Presentation p;
  p.num_generators = 2;
  p.relators.push_back(Word{1, 1});
  p.relators.push_back(Word{2, 2, 2});
  return p;
}

GroupRingElt fox_derivative(const Word& w0, int gen) {
  Word w = free_reduce(w0);
  GroupRingElt out;
  Word prefix;
  for (int c : w) {
    if (c == gen + 1) {
      out[prefix] += 1;
    } else if (c == -(gen + 1)) {
      Word u = word_concat(prefix, Word{c});
      out[u] -= 1;
    }
    prefix = word_concat(prefix, Word{c});
  }
  // Drop zero terms.
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

ProjMat RepAssignment::eval(const Word& w) const {
  ProjMat acc{CycMat::identity(images.at(0).dim())};
  for (int c : w) {
    if (c > 0)
      acc = acc * images.at(c - 1);
    else
      acc = acc * images.at(-c - 1).inv();
  }
  return acc;
}

bool RepAssignment::satisfies_relations() const {
  for (const auto& r : pres.relators)
    if (!eval(r).is_identity()) return false;
  return true;
}

CycMat eval_word(const Word& w, const std::vector<CycMat>& gens) {
  size_t d = gens.at(0).rows;
  CycMat acc = CycMat::identity(d);
  for (int c : w) {
    if (c > 0)
      acc = acc * gens.at(c - 1);
    else
      acc = acc * inverse(gens.at(-c - 1));
  }
  return acc;
}

CycMat eval_group_ring(const GroupRingElt& e, const std::vector<CycMat>& gens,
                       size_t dim) {
  CycMat acc(dim, dim);
  for (const auto& [w, coef] : e) {
    if (coef == 0) continue;
    CycMat t = eval_word(w, gens).scaled(CycNum(coef));
    acc = acc + t;
  }
  return acc;
}

}  // namespace badlocus
