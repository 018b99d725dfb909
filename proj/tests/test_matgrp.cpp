#include <random>

#include "cgt/constructions.hpp"
#include "cgt/fingroup.hpp"
#include "cgt/matgrp.hpp"
#include "cgt/morphisms.hpp"
#include "cgt/series.hpp"
#include "cgt/subgroups.hpp"
#include "doctest.h"

using cgt::ABWord;
using cgt::BigInt;
using cgt::ElementaryWord;
using cgt::SquareIntMatrix;

namespace {

SquareIntMatrix random_sl(int n, int steps, std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  SquareIntMatrix m = SquareIntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    m = m.mul(SquareIntMatrix::elementary(n, i, j, coef(rng)));
  }
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("matgrp");

TEST_CASE("orders of the classical groups over small fields") {
  CHECK(cgt::gl_order(2, 2) == 6);
  CHECK(cgt::gl_order(2, 3) == 48);
  CHECK(cgt::gl_order(3, 2) == 168);
  CHECK(cgt::sl_order(2, 2) == 6);
  CHECK(cgt::sl_order(2, 3) == 24);
  CHECK(cgt::sl_order(3, 2) == 168);

  // Cross-check against exhaustive enumeration of invertible matrices.
  for (auto [n, p] : {std::pair<int, long long>{2, 2}, {2, 3}, {3, 2}}) {
    long long total = 1;
    for (int c = 0; c < n * n; ++c) total *= p;
    long long gl = 0, sl = 0;
    for (long long code = 0; code < total; ++code) {
      SquareIntMatrix m(n);
      long long c = code;
      for (int k = 0; k < n * n; ++k) {
        m.a[k] = c % p;
        c /= p;
      }
      BigInt d = m.determinant() % p;
      if (d < 0) d += p;
      if (d != 0) ++gl;
      if (d == 1) ++sl;
    }
    CHECK(cgt::gl_order(n, p) == gl);
    CHECK(cgt::sl_order(n, p) == sl);
  }
}

TEST_CASE("elementary decomposition: fixed cases") {
  // A single elementary matrix decomposes to itself up to evaluation.
  SquareIntMatrix e = SquareIntMatrix::elementary(2, 0, 1, 5);
  ElementaryWord w = cgt::decompose_sln_z(e);
  CHECK(cgt::evaluate_elementary(w, 2) == e);

  // The identity needs no factors.
  CHECK(cgt::decompose_sln_z(SquareIntMatrix::identity(3)).empty());

  // det ≠ 1 is rejected.
  SquareIntMatrix bad(2);
  bad.at(0, 0) = 2;
  bad.at(1, 1) = 1;
  CHECK_THROWS_AS(cgt::decompose_sln_z(bad), cgt::Error);
  CHECK_THROWS_AS(cgt::decompose_sln_z(SquareIntMatrix::d_neg(2)), cgt::Error);
}

TEST_CASE("elementary decomposition: random SL round-trips") {
  std::mt19937 rng(61);
  for (int n : {2, 3, 4}) {
    for (int t = 0; t < 200; ++t) {
      SquareIntMatrix m = random_sl(n, 6, rng);
      REQUIRE(m.determinant() == 1);
      ElementaryWord w = cgt::decompose_sln_z(m);
      CHECK(cgt::evaluate_elementary(w, n) == m);
      for (const auto& f : w) CHECK(!f.is_dneg);
    }
  }
}

TEST_CASE("GL decomposition handles determinant -1 with one sign factor") {
  std::mt19937 rng(62);
  for (int n : {2, 3}) {
    for (int t = 0; t < 100; ++t) {
      SquareIntMatrix m = random_sl(n, 5, rng).mul(SquareIntMatrix::d_neg(n));
      REQUIRE(m.determinant() == -1);
      ElementaryWord w = cgt::decompose_gln_z(m);
      CHECK(cgt::evaluate_elementary(w, n) == m);
      int dnegs = 0;
      for (const auto& f : w) dnegs += f.is_dneg ? 1 : 0;
      CHECK(dnegs == 1);
      CHECK(w.back().is_dneg);
    }
    // det +1 input goes through with no sign factor.
    SquareIntMatrix m = random_sl(n, 5, rng);
    ElementaryWord w = cgt::decompose_gln_z(m);
    CHECK(cgt::evaluate_elementary(w, n) == m);
    for (const auto& f : w) CHECK(!f.is_dneg);
  }
  // |det| ≠ 1 is rejected.
  SquareIntMatrix bad(2);
  bad.at(0, 0) = 3;
  bad.at(1, 1) = 1;
  CHECK_THROWS_AS(cgt::decompose_gln_z(bad), cgt::Error);
}

TEST_CASE("SL_2(Z) words over A and B") {
  SquareIntMatrix a(2), b(2);
  a.at(0, 1) = 1;
  a.at(1, 0) = -1;
  b.at(0, 0) = 1;
  b.at(0, 1) = 1;
  b.at(1, 1) = 1;
  CHECK(cgt::evaluate_ab({{'A', 1}}) == a);
  CHECK(cgt::evaluate_ab({{'B', 1}}) == b);
  CHECK(cgt::evaluate_ab({}) == SquareIntMatrix::identity(2));
  // A^4 = I.
  CHECK(cgt::evaluate_ab({{'A', 4}}) == SquareIntMatrix::identity(2));

  // Fixed inputs.
  CHECK(cgt::sl2_to_ab(SquareIntMatrix::identity(2)).empty());
  CHECK(cgt::evaluate_ab(cgt::sl2_to_ab(a)) == a);
  CHECK(cgt::evaluate_ab(cgt::sl2_to_ab(b)) == b);

  SquareIntMatrix m(2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;
  CHECK(cgt::evaluate_ab(cgt::sl2_to_ab(m)) == m);

  // det ≠ 1 rejected.
  CHECK_THROWS_AS(cgt::sl2_to_ab(SquareIntMatrix::d_neg(2)), cgt::Error);

  // Random det-1 matrices round-trip, with large entries included.
  std::mt19937 rng(63);
  for (int t = 0; t < 300; ++t) {
    SquareIntMatrix r = random_sl(2, 8, rng);
    ABWord w = cgt::sl2_to_ab(r);
    CHECK(cgt::evaluate_ab(w) == r);
    // Reduced form: no zero exponents, no adjacent equal letters.
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w[i].exp != 0);
      if (i + 1 < w.size()) CHECK(w[i].letter != w[i + 1].letter);
    }
  }
}

TEST_CASE("commutator identity among elementary matrices") {
  CHECK(cgt::elementary_commutator_check(3, 0, 1, 2, 2, 5));
  CHECK(cgt::elementary_commutator_check(3, 0, 1, 2, 0, 7));
  for (int n : {3, 4}) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) continue;
          for (int lam = -3; lam <= 3; ++lam)
            for (int mu = -3; mu <= 3; ++mu)
              CHECK(cgt::elementary_commutator_check(n, i, j, k, lam, mu));
        }
  }
  CHECK_THROWS_AS(cgt::elementary_commutator_check(2, 0, 1, 0, 1, 1),
                  cgt::Error);
  CHECK_THROWS_AS(cgt::elementary_commutator_check(3, 0, 0, 2, 1, 1),
                  cgt::Error);
}

TEST_CASE("unitriangular groups are the Sylow p-subgroups of GL_n(Z_p)") {
  cgt::FinGroup ut32 = cgt::ut_sylow(3, 2);
  CHECK(ut32.order() == 8);
  CHECK(!ut32.is_abelian());  // Heisenberg group over F_2

  cgt::FinGroup ut33 = cgt::ut_sylow(3, 3);
  CHECK(ut33.order() == 27);
  CHECK(cgt::is_nilpotent(ut33));

  for (long long p : {2, 3, 5}) {
    CHECK(cgt::ut_sylow(2, p).order() == p);
    CHECK(cgt::ut_sylow(2, p).is_abelian());
  }

  // |UT_n(Z_p)| is the exact p-part of |GL_n(Z_p)|.
  for (auto [n, p] : {std::pair<int, long long>{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}}) {
    BigInt expect = 1;
    for (int k = 0; k < n * (n - 1) / 2; ++k) expect *= p;
    CHECK(BigInt(cgt::ut_sylow(n, p).order()) == expect);
    BigInt g = cgt::gl_order(n, p);
    CHECK(g % expect == 0);
    CHECK((g / expect) % p != 0);
  }

  // The materialized copy inside GL really is a Sylow subgroup.
  for (auto [n, p] : {std::pair<int, long long>{2, 2}, {2, 3}}) {
    cgt::FinGroup gl = cgt::gl_as_fingroup(n, p);
    auto syl = cgt::sylow_subgroups(gl, static_cast<int>(p));
    REQUIRE(!syl.empty());
    CHECK(static_cast<std::size_t>(syl[0].order()) ==
          cgt::ut_sylow(n, p).order());
  }
}

TEST_CASE("small matrix groups as abstract groups") {
  cgt::FinGroup gl22 = cgt::gl_as_fingroup(2, 2);
  CHECK(gl22.order() == 6);
  CHECK(cgt::is_isomorphic(gl22, cgt::symmetric(3)));

  cgt::FinGroup sl23 = cgt::sl_as_fingroup(2, 3);
  CHECK(sl23.order() == 24);
  CHECK(!cgt::is_isomorphic(sl23, cgt::symmetric(4)));  // SL(2,3) ≇ S_4
  CHECK(cgt::center(sl23).order() == 2);

  for (long long p : {3, 5, 7}) {
    cgt::FinGroup gl1 = cgt::gl_as_fingroup(1, p);
    CHECK(gl1.order() == static_cast<std::size_t>(p - 1));
    CHECK(cgt::is_isomorphic(gl1, cgt::cyclic(static_cast<int>(p - 1))));
  }

  CHECK(cgt::gl_as_fingroup(3, 2).order() == 168);
  CHECK_THROWS_AS(cgt::gl_as_fingroup(4, 5), cgt::BoundError);
}

TEST_SUITE_END();
