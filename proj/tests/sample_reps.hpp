#pragma once

// Shared sample representations for tests: bad free/surface constructor
// inputs and a good (trivial-centralizer) pair.

#include "badlocus/pseudo.hpp"

namespace badlocus::testing {

inline RepAssignment sample_bad_free(long p, long l, bool nonabelian) {
  std::vector<TorsionDiag> data;
  for (long j = 2; j <= l; ++j) {
    if (nonabelian && j == 2) {
      std::vector<long> e((size_t)p, 0);
      e[1] = 1;
      data.push_back(TorsionDiag(p, p * p, e));
    } else {
      data.push_back(TorsionDiag::d_xi(p, p));
    }
  }
  return build_free_bad_rep(p, l, data);
}

inline RepAssignment sample_bad_surface(long p, long g, bool nonabelian) {
  std::vector<std::pair<TorsionDiag, TorsionDiag>> data;
  for (long j = 2; j <= g; ++j) {
    if (nonabelian && j == 2) {
      std::vector<long> e((size_t)p, 0);
      e[1] = 1;
      data.emplace_back(TorsionDiag(p, p * p, e), TorsionDiag::zero(p, p));
    } else {
      data.emplace_back(TorsionDiag::zero(p, p), TorsionDiag::zero(p, p));
    }
  }
  return build_surface_bad_rep(p, g, 1, data);
}

inline std::vector<ProjMat> good_generator_pair(long p) {
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

}  // namespace badlocus::testing
