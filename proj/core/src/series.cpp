#include "cgt/series.hpp"

#include <algorithm>

#include "cgt/morphisms.hpp"
#include "cgt/subgroups.hpp"

namespace cgt {
namespace {

Subgroup commutators_span(const FinGroup& g, const Subgroup& a,
                          const Subgroup& b) {
  std::vector<int> gens;
  for (int x : a.elements)
    for (int y : b.elements) gens.push_back(g.comm(x, y));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return span_of(g, gens);
}

FactorInfo factor_info(const FinGroup& quot) {
  FactorInfo f;
  f.order = quot.order();
  f.fingerprint = fingerprint(quot);
  f.simple = is_simple(quot);
  return f;
}

// Inclusion-maximal proper normal subgroups of g.
std::vector<Subgroup> maximal_normal_subgroups(const FinGroup& g) {
  std::vector<Subgroup> normals;
  for (const auto& h : all_subgroups(g))
    if (h.order() < g.order() && is_normal(g, h)) normals.push_back(h);
  std::vector<Subgroup> maximal;
  for (const auto& n : normals) {
    bool is_max = true;
    for (const auto& m : normals)
      if (m.order() > n.order() &&
          std::includes(m.elements.begin(), m.elements.end(),
                        n.elements.begin(), n.elements.end())) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(n);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

// Composes a subgroup of a sub_to_group image back to parent indices.
Subgroup lift(const std::vector<int>& index_map, const Subgroup& h) {
  Subgroup out;
  for (int i : h.elements) out.elements.push_back(index_map[i]);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

SeriesReport composition_series_impl(const FinGroup& g, std::mt19937* rng) {
  SeriesReport rep;
  rep.kind = SeriesKind::Composition;
  rep.chain.push_back(full_subgroup(g));

  FinGroup cur = g;
  std::vector<int> to_orig(g.order());
  for (int i = 0; i < g.order(); ++i) to_orig[i] = i;

  while (cur.order() > 1) {
    auto maximal = maximal_normal_subgroups(cur);
    // deterministic default: largest order, lexicographically first
    Subgroup pick = maximal.back();
    if (rng) pick = maximal[(*rng)() % maximal.size()];
    rep.factors.push_back(factor_info(quotient(cur, pick)));
    rep.chain.push_back(lift(to_orig, pick));
    std::vector<int> sub_index;
    FinGroup next = sub_to_group(cur, pick, &sub_index);
    std::vector<int> next_to_orig(next.order());
    for (int i = 0; i < next.order(); ++i) next_to_orig[i] = to_orig[sub_index[i]];
    cur = std::move(next);
    to_orig = std::move(next_to_orig);
  }
  return rep;
}

}  // namespace

int SeriesReport::length() const {
  int l = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i].order() != chain[i + 1].order()) ++l;
  return l;
}

Subgroup commutator_subgroup(const FinGroup& g) {
  return commutators_span(g, full_subgroup(g), full_subgroup(g));
}

SeriesReport derived_series(const FinGroup& g) {
  SeriesReport rep;
  rep.kind = SeriesKind::Derived;
  rep.chain.push_back(full_subgroup(g));
  while (true) {
    const Subgroup top = rep.chain.back();
    FinGroup h = sub_to_group(g, top, nullptr);
    const Subgroup derived_in_h = commutator_subgroup(h);
    if (derived_in_h.order() == top.order()) break;  // perfect, stabilized
    rep.factors.push_back(factor_info(quotient(h, derived_in_h)));
    Subgroup derived;
    for (int i : derived_in_h.elements)
      derived.elements.push_back(top.elements[i]);
    std::sort(derived.elements.begin(), derived.elements.end());
    rep.chain.push_back(derived);
    if (derived.order() == 1) break;
  }
  return rep;
}

bool is_solvable(const FinGroup& g) {
  return derived_series(g).chain.back().order() == 1;
}

SeriesReport lower_central_series(const FinGroup& g) {
  SeriesReport rep;
  rep.kind = SeriesKind::LowerCentral;
  rep.chain.push_back(full_subgroup(g));
  while (true) {
    Subgroup next = commutators_span(g, full_subgroup(g), rep.chain.back());
    if (next.order() == rep.chain.back().order()) break;
    rep.chain.push_back(next);
    if (next.order() == 1) break;
  }
  return rep;
}

SeriesReport upper_central_series(const FinGroup& g) {
  // Ascending chain Z_0 ≤ Z_1 ≤ …, reported descending from G for
  // consistency with the other kinds.
  std::vector<Subgroup> up{trivial_subgroup(g)};
  while (true) {
    const Subgroup& z = up.back();
    Subgroup next;
    for (int x = 0; x < g.order(); ++x) {
      bool in = true;
      for (int y = 0; y < g.order() && in; ++y)
        in = z.contains(g.comm(x, y));
      if (in) next.elements.push_back(x);
    }
    if (next.order() == z.order()) break;
    up.push_back(next);
    if (next.order() == g.order()) break;
  }
  SeriesReport rep;
  rep.kind = SeriesKind::UpperCentral;
  if (up.back().order() < g.order()) rep.chain.push_back(full_subgroup(g));
  for (auto it = up.rbegin(); it != up.rend(); ++it) rep.chain.push_back(*it);
  return rep;
}

bool is_nilpotent(const FinGroup& g) {
  return lower_central_series(g).chain.back().order() == 1;
}

std::optional<int> nilpotency_class(const FinGroup& g) {
  auto lower = lower_central_series(g);
  if (lower.chain.back().order() != 1) return std::nullopt;
  return lower.length();
}

SeriesReport composition_series(const FinGroup& g) {
  return composition_series_impl(g, nullptr);
}

SeriesReport composition_series_randomized(const FinGroup& g,
                                           std::mt19937& rng) {
  return composition_series_impl(g, &rng);
}

std::vector<std::string> jh_factors(const FinGroup& g) {
  std::vector<std::string> f;
  for (const auto& fi : composition_series(g).factors)
    f.push_back(fi.fingerprint);
  std::sort(f.begin(), f.end());
  return f;
}

bool is_simple(const FinGroup& g) {
  if (g.order() == 1) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    if (normal_closure(g, {x}).order() != g.order()) return false;
  }
  return true;
}

}  // namespace cgt
