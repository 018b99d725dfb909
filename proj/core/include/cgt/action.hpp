#ifndef CGT_ACTION_HPP
#define CGT_ACTION_HPP

#include "cgt/fingroup.hpp"

namespace cgt {

/// Action of a finite group on {0..N-1}, stored as a dense |G|×N table.
/// Construction verifies the identity acts trivially and that
/// (g·h)(x) = g(h(x)) for all g, h, x.
class Action {
 public:
  Action(FinGroup group, int domain_size, std::vector<int> table);

  /// Builds the table by evaluating `act(g, x)`.
  template <typename Fn>
  static Action make(FinGroup group, int domain_size, Fn act) {
    std::vector<int> table(static_cast<std::size_t>(group.order()) * domain_size);
    for (int g = 0; g < group.order(); ++g)
      for (int x = 0; x < domain_size; ++x)
        table[static_cast<std::size_t>(g) * domain_size + x] = act(g, x);
    return Action(std::move(group), domain_size, std::move(table));
  }

  const FinGroup& group() const { return group_; }
  int domain_size() const { return domain_; }
  int apply(int g, int x) const { return table_[static_cast<std::size_t>(g) * domain_ + x]; }

  std::vector<int> orbit(int x) const;   // sorted
  Subgroup stabilizer(int x) const;
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  /// Fixed points of g.
  int chi(int g) const;

 private:
  FinGroup group_;
  int domain_;
  std::vector<int> table_;
};

struct BurnsideReport {
  std::vector<int> fixed_counts;  // χ(g) per group element
  long long orbit_count = 0;
  std::vector<std::vector<int>> orbits;
};

/// Orbit count via the χ-average, cross-checked against the direct
/// orbit partition. Throws VerifyError if Σχ is not divisible by |G|.
BurnsideReport burnside_count(const Action& a);

/// Unordered factorizations of N into k natural factors, counted by
/// S_k acting on prime-exponent tuples.
long long factorization_orbits(long long n, int parts,
                               std::size_t domain_bound = 2000000);

/// The prime-exponent-tuple action itself (S_k on the composition
/// domain); exposed for reporting χ values.
Action factorization_action(long long n, int parts,
                            std::size_t domain_bound = 2000000);

/// G acting on the left cosets of H by translation; kernel is the
/// intersection of all conjugates of H (largest normal subgroup of G
/// inside H).
struct CosetAction {
  Action action;
  Subgroup kernel;
  std::vector<std::vector<int>> cosets;  // point i = cosets[i]
};
CosetAction coset_action(const FinGroup& g, const Subgroup& h);

}  // namespace cgt

#endif
