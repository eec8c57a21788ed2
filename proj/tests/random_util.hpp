#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "braidperm/braid_word.hpp"
#include "braidperm/perm.hpp"

namespace testutil {

inline braidperm::Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return braidperm::Permutation(im);
}

inline braidperm::BraidWord random_word(int k, int len, std::mt19937& rng) {
  std::uniform_int_distribution<int> gen(1, k - 1), sign(0, 1);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return braidperm::BraidWord(k, ls);
}

}  // namespace testutil
