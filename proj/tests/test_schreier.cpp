#include <random>
#include <set>

#include "cgt/perm.hpp"
#include "cgt/schreier.hpp"
#include "cgt/word.hpp"
#include "doctest.h"
#include "helpers.hpp"

using cgt::CosetTable;
using cgt::Permutation;
using cgt::Word;

TEST_SUITE_BEGIN("schreier");

TEST_CASE("two cosets by parity: F_2 onto C_2") {
  Permutation flip({2, 1});
  CosetTable ct = cgt::coset_table(2, {flip, flip});
  CHECK(ct.coset_count == 2);
  auto names = cgt::default_alphabet(2);
  REQUIRE(ct.transversal.size() == 2);
  CHECK(ct.transversal[0].empty());
  CHECK(ct.transversal[1].str(names) == "x");

  auto gens = cgt::schreier_generators(ct);
  CHECK(gens.size() == 3);  // j(n-1)+1 = 2*1+1
}

TEST_CASE("K = whole image group gives a single coset") {
  Permutation flip({2, 1});
  CosetTable ct =
      cgt::coset_table(2, {flip, flip}, {Permutation::identity(2), flip});
  CHECK(ct.coset_count == 1);
  CHECK(ct.transversal[0].empty());
}

TEST_CASE("F_2 onto S_3: six cosets, seven kernel generators") {
  CosetTable ct = cgt::coset_table(
      2, {cgt::parse_permutation("(1 2)", 3), cgt::parse_permutation("(1 2 3)")});
  CHECK(ct.coset_count == 6);
  auto gens = cgt::schreier_generators(ct);
  CHECK(gens.size() == 7);
  for (const Word& g : gens) {
    CHECK(!g.empty());
    CHECK(ct.in_subgroup(g));
  }
}

TEST_CASE("cyclic kernel: F_1 onto C_k") {
  for (int k = 2; k <= 7; ++k) {
    std::vector<int> img(k);
    for (int i = 0; i < k; ++i) img[i] = (i + 1) % k + 1;
    CosetTable ct = cgt::coset_table(1, {Permutation(img)});
    CHECK(ct.coset_count == k);
    auto gens = cgt::schreier_generators(ct);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == Word::letter(1, 0, k));
  }
}

TEST_CASE("transversals are Schreier systems (suffix-closed) and shortlex") {
  std::mt19937 rng(51);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + t % 3, m = 2 + t % 4;
    std::vector<Permutation> images;
    for (int i = 0; i < n; ++i) images.push_back(cgt_test::random_perm(m, rng));
    CosetTable ct = cgt::coset_table(n, images);

    std::set<Word> transversal(ct.transversal.begin(), ct.transversal.end());
    CHECK(transversal.size() == static_cast<std::size_t>(ct.coset_count));
    for (const Word& w : ct.transversal) {
      // Each suffix of a transversal word is again a transversal word,
      // including suffixes that split a syllable.
      const auto& syl = w.syllables();
      for (std::size_t i = 0; i < syl.size(); ++i) {
        long long sign = syl[i].exp > 0 ? 1 : -1;
        for (long long e = 1; e <= std::abs(syl[i].exp); ++e) {
          std::vector<cgt::Syllable> suffix(syl.begin() + i, syl.end());
          suffix[0].exp = sign * e;
          CHECK(transversal.count(Word(n, suffix)) == 1);
        }
      }
      // The transversal word reaches its own coset.
      CHECK(ct.transversal[ct.coset_of(w)] == w);
    }
  }
}

TEST_CASE("rank formula over random homomorphisms") {
  std::mt19937 rng(52);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + t % 3;
    int m = 2 + t % 4;  // degree ≤ 5
    std::vector<Permutation> images;
    for (int i = 0; i < n; ++i) images.push_back(cgt_test::random_perm(m, rng));
    CosetTable ct = cgt::coset_table(n, images);
    auto gens = cgt::schreier_generators(ct);
    CHECK(static_cast<long long>(gens.size()) ==
          static_cast<long long>(ct.coset_count) * (n - 1) + 1);
  }
}

TEST_CASE("rewriting kernel elements in the Schreier generators") {
  CosetTable ct = cgt::coset_table(
      2, {cgt::parse_permutation("(1 2)", 3), cgt::parse_permutation("(1 2 3)")});
  auto gens = cgt::schreier_generators(ct);

  // Each generator rewrites to itself (a single symbol).
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Word rewritten = cgt::rewrite_in_generators(ct, gens[i]);
    CHECK(rewritten == Word::letter(static_cast<int>(gens.size()),
                                    static_cast<int>(i)));
  }

  // Random products of generators round-trip through rewriting.
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int t = 0; t < 200; ++t) {
    Word h(2);
    for (int i = 0; i < 5; ++i) {
      Word g = gens[pick(rng)];
      h = h * (sgn(rng) ? g : g.inverse());
    }
    if (h.empty()) continue;
    REQUIRE(ct.in_subgroup(h));
    Word gen_word = cgt::rewrite_in_generators(ct, h);
    CHECK(cgt::expand_generator_word(ct, gen_word) == h);
  }

  // Elements outside the kernel are rejected.
  CHECK_THROWS_AS(cgt::rewrite_in_generators(ct, Word::letter(2, 0)), cgt::Error);
}

TEST_CASE("freeness witness: generator words never cancel to nothing") {
  CosetTable ct = cgt::coset_table(
      2, {cgt::parse_permutation("(1 2)", 4), cgt::parse_permutation("(1 2 3 4)")});
  auto gens = cgt::schreier_generators(ct);
  const int r = static_cast<int>(gens.size());

  std::mt19937 rng(54);
  std::uniform_int_distribution<int> letter(0, r - 1);
  std::uniform_int_distribution<int> exp(-2, 2);
  int tested = 0;
  while (tested < 1000) {
    std::vector<cgt::Syllable> raw;
    for (int i = 0; i < 4; ++i) {
      int e = exp(rng);
      if (e != 0) raw.push_back(cgt::Syllable{letter(rng), e});
    }
    Word gen_word(r, raw);
    if (gen_word.empty()) continue;
    ++tested;
    CHECK(!cgt::expand_generator_word(ct, gen_word).empty());
  }
}

TEST_CASE("invalid K is rejected") {
  // K must be a subgroup of the image closure.
  CHECK_THROWS_AS(
      cgt::coset_table(1, {cgt::parse_permutation("(1 2 3)")},
                       {Permutation::identity(3), cgt::parse_permutation("(1 2)", 3)}),
      cgt::Error);
}

TEST_SUITE_END();
