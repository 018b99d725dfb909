#ifndef CGT_TEST_HELPERS_HPP
#define CGT_TEST_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cgt/perm.hpp"

namespace cgt_test {

/// All n! permutations of degree n, lexicographic by image vector.
inline std::vector<cgt::Permutation> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<cgt::Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline cgt::Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return cgt::Permutation(img);
}

}  // namespace cgt_test

#endif
