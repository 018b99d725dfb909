#include <algorithm>
#include <set>

#include "cgt/constructions.hpp"
#include "cgt/fingroup.hpp"
#include "cgt/perm.hpp"
#include "cgt/series.hpp"
#include "doctest.h"
#include "helpers.hpp"

using cgt::FinGroup;
using cgt::Permutation;
using cgt::Subgroup;

namespace {

int index_of_label(const FinGroup& g, const std::string& label) {
  for (int i = 0; i < g.order(); ++i)
    if (g.label(i) == label) return i;
  REQUIRE(false);
  return -1;
}

int index_of_perm(const FinGroup& g, const Permutation& p) {
  return index_of_label(g, p.is_identity() ? "()" : p.to_cycles());
}

}  // namespace

TEST_SUITE_BEGIN("fingroup");

TEST_CASE("closure from generators") {
  FinGroup s3 = cgt::perm_group(
      {cgt::parse_permutation("(1 2)", 3), cgt::parse_permutation("(1 2 3)")});
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);  // identity first in BFS order

  CHECK(cgt::perm_group({}).order() == 1);
  CHECK(cgt::quaternion().order() == 8);
}

TEST_CASE("closure bound is enforced") {
  CHECK_THROWS_AS(cgt::symmetric(5, 100), cgt::BoundError);
}

TEST_CASE("table invariants hold and serialization round-trips") {
  for (const FinGroup& g : {cgt::symmetric(4), cgt::quaternion(),
                            cgt::dihedral(6), cgt::cyclic(12)}) {
    FinGroup back = FinGroup::from_json(g.to_json());
    CHECK(back.order() == g.order());
    for (int a = 0; a < g.order(); ++a) {
      CHECK(back.label(a) == g.label(a));
      CHECK(g.mul(a, g.inv(a)) == g.identity());
      for (int b = 0; b < g.order(); ++b) CHECK(back.mul(a, b) == g.mul(a, b));
    }
  }
}

TEST_CASE("malformed tables are rejected") {
  // Not a Latin square.
  CHECK_THROWS_AS(FinGroup({"e", "a"}, {0, 0, 0, 0}, {}), cgt::VerifyError);
  // Latin square (subtraction mod 3) with no two-sided identity.
  CHECK_THROWS_AS(FinGroup({"a", "b", "c"}, {0, 2, 1, 1, 0, 2, 2, 1, 0}, {}),
                  cgt::VerifyError);
}

TEST_CASE("is_subgroup follows the one-step criterion") {
  FinGroup s3 = cgt::symmetric(3);
  int e = s3.identity();
  int t12 = index_of_perm(s3, cgt::parse_permutation("(1 2)", 3));
  int t13 = index_of_perm(s3, cgt::parse_permutation("(1 3)", 3));
  CHECK(cgt::is_subgroup(s3, {e}));
  CHECK(cgt::is_subgroup(s3, {e, t12}));
  CHECK(!cgt::is_subgroup(s3, {e, t12, t13}));
}

TEST_CASE("cosets partition the group") {
  FinGroup s3 = cgt::symmetric(3);
  Subgroup a3 = cgt::span_of(
      s3, {index_of_perm(s3, cgt::parse_permutation("(1 2 3)"))});
  CHECK(a3.order() == 3);

  for (auto side : {cgt::CosetSide::Left, cgt::CosetSide::Right}) {
    auto blocks = cgt::cosets(s3, a3, side);
    CHECK(blocks.size() == 2);
    std::set<int> seen;
    for (const auto& b : blocks) {
      CHECK(b.size() == 3);
      for (int x : b) CHECK(seen.insert(x).second);
    }
    CHECK(seen.size() == 6);
  }
  CHECK(cgt::cosets(s3, cgt::full_subgroup(s3), cgt::CosetSide::Left).size() == 1);
}

TEST_CASE("|HK| = |H||K|/|H∩K| across subgroup pairs of S_4") {
  FinGroup g = cgt::symmetric(4);
  std::vector<Subgroup> subs;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < x; ++y) subs.push_back(cgt::span_of(g, {x, y}));
  std::sort(subs.begin(), subs.end());
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  for (std::size_t i = 0; i < subs.size(); i += 7)
    for (std::size_t j = 0; j < subs.size(); j += 5) {
      const auto& h = subs[i];
      const auto& k = subs[j];
      std::set<int> hk;
      for (int a : h.elements)
        for (int b : k.elements) hk.insert(g.mul(a, b));
      std::vector<int> meet;
      std::set_intersection(h.elements.begin(), h.elements.end(),
                            k.elements.begin(), k.elements.end(),
                            std::back_inserter(meet));
      CHECK(hk.size() * meet.size() ==
            static_cast<std::size_t>(h.order()) * k.order());
    }
}

TEST_CASE("normality and normal closure") {
  FinGroup s3 = cgt::symmetric(3);
  Subgroup a3 = cgt::span_of(
      s3, {index_of_perm(s3, cgt::parse_permutation("(1 2 3)"))});
  CHECK(cgt::is_normal(s3, a3));

  int t12 = index_of_perm(s3, cgt::parse_permutation("(1 2)", 3));
  CHECK(!cgt::is_normal(s3, cgt::span_of(s3, {t12})));
  CHECK(cgt::normal_closure(s3, {t12}).order() == 6);

  for (int n = 3; n <= 5; ++n) {
    FinGroup sn = cgt::symmetric(n);
    Subgroup an;
    for (int x = 0; x < sn.order(); ++x)
      if (cgt::sign(cgt::parse_permutation(sn.label(x), n)) == 1)
        an.elements.push_back(x);
    CHECK(an.order() * 2 == sn.order());
    CHECK(cgt::is_normal(sn, an));
  }
}

TEST_CASE("center, centralizer, normalizer") {
  CHECK(cgt::center(cgt::symmetric(3)).order() == 1);
  CHECK(cgt::center(cgt::quaternion()).order() == 2);
  for (int n = 3; n <= 8; ++n)
    CHECK(cgt::center(cgt::dihedral(n)).order() == (n % 2 == 0 ? 2 : 1));

  FinGroup g = cgt::symmetric(4);
  auto classes = cgt::conjugacy_classes(g);
  for (const auto& cls : classes)
    CHECK(cls.size() * cgt::centralizer(g, cls.front()).order() ==
          static_cast<std::size_t>(g.order()));

  // N_G(H) is the largest subgroup in which H is normal.
  Subgroup h = cgt::span_of(g, {index_of_perm(g, cgt::parse_permutation("(1 2)", 4))});
  Subgroup n = cgt::normalizer(g, h);
  CHECK(n.order() == 4);
  for (int x : n.elements)
    for (int a : h.elements) CHECK(h.contains(g.conj(x, a)));
}

TEST_CASE("class equation") {
  auto ce = cgt::class_equation(cgt::symmetric(3));
  CHECK(ce.center_size == 1);
  std::vector<int> sizes;
  for (auto [rep, size] : ce.classes) sizes.push_back(size);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{2, 3});

  for (const FinGroup& g :
       {cgt::cyclic(12), cgt::dihedral(5), cgt::symmetric(4), cgt::quaternion()}) {
    auto eq = cgt::class_equation(g);
    int sum = eq.center_size;
    for (auto [rep, size] : eq.classes) {
      sum += size;
      CHECK(size > 1);
      CHECK(g.order() % size == 0);
    }
    CHECK(sum == g.order());
    if (g.is_abelian()) CHECK(eq.center_size == g.order());
  }
}

TEST_CASE("quotients") {
  FinGroup s3 = cgt::symmetric(3);
  Subgroup a3 = cgt::span_of(
      s3, {index_of_perm(s3, cgt::parse_permutation("(1 2 3)"))});
  CHECK(cgt::quotient(s3, a3).order() == 2);
  CHECK(cgt::quotient(s3, cgt::full_subgroup(s3)).order() == 1);

  int t12 = index_of_perm(s3, cgt::parse_permutation("(1 2)", 3));
  CHECK_THROWS_AS(cgt::quotient(s3, cgt::span_of(s3, {t12})), cgt::VerifyError);

  // G/G' is abelian on a non-abelian sample.
  for (const FinGroup& g : {cgt::symmetric(4), cgt::dihedral(6), cgt::quaternion()}) {
    Subgroup derived = cgt::commutator_subgroup(g);
    CHECK(cgt::quotient(g, derived).is_abelian());
  }
}

TEST_CASE("Cayley embedding: left translations are distinct permutations") {
  for (const FinGroup& g : {cgt::dihedral(4), cgt::quaternion(), cgt::cyclic(9)}) {
    std::set<std::vector<int>> rows;
    for (int a = 0; a < g.order(); ++a) {
      std::vector<int> row(g.order());
      for (int x = 0; x < g.order(); ++x) row[x] = g.mul(a, x);
      CHECK(rows.insert(row).second);
    }
    // Homomorphism: the row of a·b is the composite of the rows.
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        for (int x = 0; x < g.order(); ++x)
          CHECK(g.mul(g.mul(a, b), x) == g.mul(a, g.mul(b, x)));
  }
}

TEST_CASE("span_of and sub_to_group agree with labels") {
  FinGroup d4 = cgt::dihedral(4);
  Subgroup rot = cgt::span_of(d4, {index_of_label(d4, "σ")});
  CHECK(rot.order() == 4);
  std::vector<int> back;
  FinGroup c4 = cgt::sub_to_group(d4, rot, &back);
  CHECK(c4.order() == 4);
  for (int i = 0; i < 4; ++i) CHECK(d4.label(back[i]) == c4.label(i));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(back[c4.mul(i, j)] == d4.mul(back[i], back[j]));
}

TEST_SUITE_END();
