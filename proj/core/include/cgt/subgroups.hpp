#ifndef CGT_SUBGROUPS_HPP
#define CGT_SUBGROUPS_HPP

#include <optional>

#include "cgt/fingroup.hpp"

namespace cgt {

inline constexpr int kDefaultSubgroupBound = 256;

/// Every subgroup of g: cyclic subgroups first, then pairwise joins to
/// a fixpoint. Output sorted by (order, lexicographic element set).
/// Throws BoundError above the configured order bound.
std::vector<Subgroup> all_subgroups(const FinGroup& g,
                                    int bound = kDefaultSubgroupBound);

/// Maximal proper subgroups (inclusion-maximal among proper subgroups).
std::vector<Subgroup> maximal_subgroups(const FinGroup& g,
                                        int bound = kDefaultSubgroupBound);

/// Intersection of all maximal subgroups; the whole group when G has
/// none (|G| = 1).
Subgroup frattini(const FinGroup& g, int bound = kDefaultSubgroupBound);

/// All Sylow p-subgroups. Throws Error if p is not a prime dividing |G|.
std::vector<Subgroup> sylow_subgroups(const FinGroup& g, long long p,
                                      int bound = kDefaultSubgroupBound);

/// A subgroup of order m when one exists, where |G| = m·n, gcd(m,n)=1.
/// Guaranteed to succeed for solvable G (Hall); may be nullopt otherwise.
std::optional<Subgroup> hall_subgroup(const FinGroup& g, long long m,
                                      int bound = kDefaultSubgroupBound);

bool is_prime(long long n);
std::vector<std::pair<long long, int>> factorize(long long n);

}  // namespace cgt

#endif
