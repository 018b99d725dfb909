#include "cgt/fingroup.hpp"

#include <algorithm>
#include <numeric>

namespace cgt {

FinGroup::FinGroup(std::vector<std::string> labels, std::vector<int> table,
                   std::vector<int> generators)
    : order_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(table)),
      generators_(std::move(generators)) {
  if (order_ < 1) throw VerifyError("group must contain an identity");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw VerifyError("multiplication table has wrong shape");
  verify();
}

void FinGroup::verify() {
  const int m = order_;
  // Latin square.
  std::vector<char> seen(m);
  for (int a = 0; a < m; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < m; ++b) {
      const int v = mul(a, b);
      if (v < 0 || v >= m || seen[v])
        throw VerifyError("table row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < m; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < m; ++a) {
      const int v = mul(a, b);
      if (seen[v]) throw VerifyError("table column is not a permutation");
      seen[v] = 1;
    }
  }
  // Two-sided identity.
  identity_ = -1;
  for (int e = 0; e < m; ++e) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw VerifyError("no identity element");
  // Inverses.
  inverse_.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw VerifyError("element without inverse");
  }
  // Associativity: exhaustive up to order 128, sampled above.
  if (m <= 128) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw VerifyError("multiplication table is not associative");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> d(0, m - 1);
    for (int t = 0; t < 100000; ++t) {
      const int a = d(rng), b = d(rng), c = d(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw VerifyError("multiplication table is not associative");
    }
  }
  for (int g : generators_)
    if (g < 0 || g >= m) throw VerifyError("generator index out of range");
}

int FinGroup::power(int a, long long k) const {
  int base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  int acc = identity_;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FinGroup::comm(int a, int b) const {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

int FinGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FinGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::pair<int, int>> FinGroup::order_histogram() const {
  std::map<int, int> h;
  for (int a = 0; a < order_; ++a) ++h[element_order(a)];
  return {h.begin(), h.end()};
}

nlohmann::ordered_json FinGroup::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order_;
  j["labels"] = labels_;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int a = 0; a < order_; ++a) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int b = 0; b < order_; ++b) row.push_back(mul(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  j["identity"] = identity_;
  j["generators"] = generators_;
  return j;
}

FinGroup FinGroup::from_json(const nlohmann::json& j) {
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  const int m = static_cast<int>(labels.size());
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(m) * m);
  for (const auto& row : j.at("table"))
    for (const auto& v : row) table.push_back(v.get<int>());
  std::vector<int> gens;
  if (j.contains("generators")) gens = j.at("generators").get<std::vector<int>>();
  return FinGroup(std::move(labels), std::move(table), std::move(gens));
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool Subgroup::operator<(const Subgroup& rhs) const {
  if (elements.size() != rhs.elements.size())
    return elements.size() < rhs.elements.size();
  return elements < rhs.elements;
}

bool is_subgroup(const FinGroup& g, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (int x : s) in[x] = 1;
  for (int a : s)
    for (int b : s)
      if (!in[g.mul(a, g.inv(b))]) return false;
  return true;
}

Subgroup span_of(const FinGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> frontier{g.identity()};
  in[g.identity()] = 1;
  for (int x : gens)
    if (!in[x]) {
      in[x] = 1;
      frontier.push_back(x);
    }
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (int x : gens) {
      const int p = g.mul(frontier[i], x);
      if (!in[p]) {
        in[p] = 1;
        frontier.push_back(p);
      }
    }
  Subgroup h;
  for (int i = 0; i < g.order(); ++i)
    if (in[i]) h.elements.push_back(i);
  return h;
}

Subgroup trivial_subgroup(const FinGroup& g) { return Subgroup{{g.identity()}}; }

Subgroup full_subgroup(const FinGroup& g) {
  Subgroup h;
  h.elements.resize(g.order());
  std::iota(h.elements.begin(), h.elements.end(), 0);
  return h;
}

std::vector<std::vector<int>> cosets(const FinGroup& g, const Subgroup& h,
                                     CosetSide side) {
  if (!is_subgroup(g, h.elements)) throw VerifyError("not a subgroup");
  std::vector<char> placed(g.order(), 0);
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < g.order(); ++x) {
    if (placed[x]) continue;
    std::vector<int> block;
    for (int hh : h.elements)
      block.push_back(side == CosetSide::Left ? g.mul(x, hh) : g.mul(hh, x));
    std::sort(block.begin(), block.end());
    for (int y : block) placed[y] = 1;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_normal(const FinGroup& g, const Subgroup& h) {
  for (int x = 0; x < g.order(); ++x)
    for (int hh : h.elements)
      if (!h.contains(g.conj(x, hh))) return false;
  return true;
}

Subgroup normal_closure(const FinGroup& g, const std::vector<int>& s) {
  std::vector<int> gens;
  for (int x = 0; x < g.order(); ++x)
    for (int y : s) gens.push_back(g.conj(x, y));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return span_of(g, gens);
}

Subgroup center(const FinGroup& g) {
  Subgroup z;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) z.elements.push_back(x);
  }
  return z;
}

Subgroup centralizer(const FinGroup& g, int x) {
  Subgroup c;
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.elements.push_back(y);
  return c;
}

Subgroup normalizer(const FinGroup& g, const Subgroup& s) {
  Subgroup n;
  for (int x = 0; x < g.order(); ++x) {
    bool norms = true;
    for (int y : s.elements)
      if (!s.contains(g.conj(x, y))) {
        norms = false;
        break;
      }
    if (norms) n.elements.push_back(x);
  }
  return n;
}

std::vector<std::vector<int>> conjugacy_classes(const FinGroup& g) {
  std::vector<char> placed(g.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    if (placed[x]) continue;
    std::vector<int> cls;
    for (int a = 0; a < g.order(); ++a) {
      const int y = g.conj(a, x);
      if (!placed[y]) {
        placed[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

ClassEquation class_equation(const FinGroup& g) {
  ClassEquation eq;
  eq.group_order = g.order();
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1)
      ++eq.center_size;
    else
      eq.classes.emplace_back(cls.front(), static_cast<int>(cls.size()));
  }
  int total = eq.center_size;
  for (auto& [rep, size] : eq.classes) total += size;
  if (total != g.order()) throw VerifyError("class equation does not sum");
  return eq;
}

FinGroup quotient(const FinGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw VerifyError("subgroup is not normal");
  auto blocks = cosets(g, n, CosetSide::Left);
  const int q = static_cast<int>(blocks.size());
  std::vector<int> block_of(g.order());
  for (int b = 0; b < q; ++b)
    for (int x : blocks[b]) block_of[x] = b;
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[static_cast<std::size_t>(a) * q + b] =
          block_of[g.mul(blocks[a].front(), blocks[b].front())];
  // Well-definedness: representative choice must not matter.
  for (int a = 0; a < q; ++a)
    for (int x : blocks[a])
      for (int b = 0; b < q; ++b)
        if (block_of[g.mul(x, blocks[b].front())] !=
            table[static_cast<std::size_t>(a) * q + b])
          throw VerifyError("quotient product ill-defined");
  std::vector<std::string> labels(q);
  for (int b = 0; b < q; ++b)
    labels[b] = g.label(blocks[b].front()) + "N";
  std::vector<int> gens;
  for (int x : g.generators()) gens.push_back(block_of[x]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return FinGroup(std::move(labels), std::move(table), std::move(gens));
}

FinGroup sub_to_group(const FinGroup& g, const Subgroup& h,
                      std::vector<int>* out_index) {
  if (!is_subgroup(g, h.elements)) throw VerifyError("not a subgroup");
  const int m = h.order();
  std::vector<int> back(g.order(), -1);
  for (int i = 0; i < m; ++i) back[h.elements[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[static_cast<std::size_t>(a) * m + b] =
          back[g.mul(h.elements[a], h.elements[b])];
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = g.label(h.elements[i]);
  if (out_index) *out_index = h.elements;
  std::vector<int> gens;
  for (int i = 0; i < m; ++i)
    if (h.elements[i] != g.identity()) gens.push_back(i);
  return FinGroup(std::move(labels), std::move(table), std::move(gens));
}

}  // namespace cgt
