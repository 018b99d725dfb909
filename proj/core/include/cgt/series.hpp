#ifndef CGT_SERIES_HPP
#define CGT_SERIES_HPP

#include <optional>

#include "cgt/fingroup.hpp"

namespace cgt {

enum class SeriesKind { Derived, LowerCentral, UpperCentral, Composition };

struct FactorInfo {
  int order = 0;
  std::string fingerprint;
  bool simple = false;
};

/// Subnormal chain from G down to {e}; chain[i+1] is normal in chain[i]
/// (all members given as subgroups of the original G). factors[i]
/// describes chain[i]/chain[i+1] where applicable.
struct SeriesReport {
  SeriesKind kind;
  std::vector<Subgroup> chain;
  std::vector<FactorInfo> factors;

  /// Strictly-decreasing steps only.
  int length() const;
};

Subgroup commutator_subgroup(const FinGroup& g);

SeriesReport derived_series(const FinGroup& g);
bool is_solvable(const FinGroup& g);

SeriesReport lower_central_series(const FinGroup& g);
SeriesReport upper_central_series(const FinGroup& g);
bool is_nilpotent(const FinGroup& g);
std::optional<int> nilpotency_class(const FinGroup& g);

/// Composition series; the maximal normal subgroup of largest order is
/// chosen at each step, ties broken lexicographically. With an rng,
/// the choice among maximal normal subgroups is uniform instead.
SeriesReport composition_series(const FinGroup& g);
SeriesReport composition_series_randomized(const FinGroup& g,
                                           std::mt19937& rng);

/// Multiset (sorted) of composition-factor fingerprints; independent of
/// the series by Jordan–Hölder.
std::vector<std::string> jh_factors(const FinGroup& g);

bool is_simple(const FinGroup& g);

}  // namespace cgt

#endif
