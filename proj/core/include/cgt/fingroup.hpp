#ifndef CGT_FINGROUP_HPP
#define CGT_FINGROUP_HPP

#include <cstddef>
#include <map>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cgt/error.hpp"

namespace cgt {

inline constexpr std::size_t kDefaultClosureBound = 20000;

/// Finite group materialized as a full multiplication table. Immutable
/// after construction; construction verifies the table (Latin square,
/// identity, inverses; associativity exhaustively up to order 128 and
/// on 10^5 sampled triples above).
class FinGroup {
 public:
  FinGroup(std::vector<std::string> labels, std::vector<int> table,
           std::vector<int> generators);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<int>& generators() const { return generators_; }

  int power(int a, long long k) const;
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }  // g a g⁻¹
  int comm(int a, int b) const;                                    // a b a⁻¹ b⁻¹

  int element_order(int a) const;
  bool is_abelian() const;

  /// Histogram of element orders, sorted by order; part of the
  /// isomorphism fingerprint.
  std::vector<std::pair<int, int>> order_histogram() const;

  nlohmann::ordered_json to_json() const;
  static FinGroup from_json(const nlohmann::json& j);

 private:
  int order_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
  int identity_ = -1;
  std::vector<int> inverse_;
  std::vector<int> generators_;

  void verify() ;
};

/// Subset of a parent group's element indices, sorted. Closure under
/// product/inverse is the caller's responsibility (see is_subgroup).
struct Subgroup {
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  bool operator==(const Subgroup&) const = default;
  bool operator<(const Subgroup& rhs) const;
};

/// True iff ∀a,b ∈ S: a·b⁻¹ ∈ S (one-step subgroup criterion).
/// S must be nonempty.
bool is_subgroup(const FinGroup& g, const std::vector<int>& s);

/// Subgroup generated by `gens` inside g (index-level BFS closure).
Subgroup span_of(const FinGroup& g, const std::vector<int>& gens);

Subgroup trivial_subgroup(const FinGroup& g);
Subgroup full_subgroup(const FinGroup& g);

/// Left or right coset partition of g by h; blocks sorted internally
/// and ordered by smallest member.
enum class CosetSide { Left, Right };
std::vector<std::vector<int>> cosets(const FinGroup& g, const Subgroup& h,
                                     CosetSide side);

bool is_normal(const FinGroup& g, const Subgroup& h);
Subgroup normal_closure(const FinGroup& g, const std::vector<int>& s);

Subgroup center(const FinGroup& g);
Subgroup centralizer(const FinGroup& g, int x);
Subgroup normalizer(const FinGroup& g, const Subgroup& s);

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<int>> conjugacy_classes(const FinGroup& g);

/// |G| = |Z(G)| + Σ nontrivial class sizes.
struct ClassEquation {
  int group_order = 0;
  int center_size = 0;
  std::vector<std::pair<int, int>> classes;  // (representative, size), size > 1
};
ClassEquation class_equation(const FinGroup& g);

/// Quotient G/N as a standalone group; throws VerifyError if N is not
/// normal. Coset labels come from the smallest representative.
FinGroup quotient(const FinGroup& g, const Subgroup& n);

/// Standalone group on the elements of h (labels inherited); out_index
/// maps new indices back to parent indices when non-null.
FinGroup sub_to_group(const FinGroup& g, const Subgroup& h,
                      std::vector<int>* out_index = nullptr);

/// BFS closure of abstract generators under an associative product.
/// Element order is deterministic: identity first, then breadth-first
/// with generators applied in input order (new = old * gen).
template <typename T, typename Mul, typename LabelFn>
FinGroup closure(const std::vector<T>& gens, const T& id, Mul mul,
                 LabelFn label, std::size_t bound = kDefaultClosureBound) {
  std::vector<T> elems;
  std::map<T, int> index;
  elems.push_back(id);
  index.emplace(id, 0);
  std::queue<int> todo;
  todo.push(0);
  // Seed generators ahead of BFS so their indices follow input order.
  for (const T& gen : gens) {
    if (index.contains(gen)) continue;
    const int idx = static_cast<int>(elems.size());
    elems.push_back(gen);
    index.emplace(gen, idx);
    todo.push(idx);
  }
  while (!todo.empty()) {
    const int cur = todo.front();
    todo.pop();
    for (const T& gen : gens) {
      T prod = mul(elems[cur], gen);
      if (index.contains(prod)) continue;
      if (elems.size() >= bound)
        throw BoundError("closure exceeds configured bound of " +
                         std::to_string(bound) + " elements");
      const int idx = static_cast<int>(elems.size());
      index.emplace(prod, idx);
      elems.push_back(std::move(prod));
      todo.push(idx);
    }
  }
  const int m = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto it = index.find(mul(elems[a], elems[b]));
      if (it == index.end())
        throw VerifyError("multiplication oracle left the closed set");
      table[static_cast<std::size_t>(a) * m + b] = it->second;
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = label(elems[i]);
  std::vector<int> gen_idx;
  for (const T& gen : gens) gen_idx.push_back(index.at(gen));
  return FinGroup(std::move(labels), std::move(table), std::move(gen_idx));
}

}  // namespace cgt

#endif
