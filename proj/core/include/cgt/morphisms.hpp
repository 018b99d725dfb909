#ifndef CGT_MORPHISMS_HPP
#define CGT_MORPHISMS_HPP

#include "cgt/fingroup.hpp"

namespace cgt {

inline constexpr int kDefaultIsoBound = 64;

/// Cheap isomorphism invariant: order, abelian flag, element-order
/// histogram, conjugacy-class-size multiset; encoded as a string.
std::string fingerprint(const FinGroup& g);

/// A small generating sequence found greedily (largest element order
/// first, then smallest index extending the span).
std::vector<int> small_generating_set(const FinGroup& g);

/// Decides isomorphism by fingerprint filter, then backtracking search
/// for a generator mapping. Exact up to the bound; throws BoundError
/// above it.
bool is_isomorphic(const FinGroup& g, const FinGroup& h,
                   int bound = kDefaultIsoBound);

/// All automorphisms of g, each as the image vector on g's elements.
std::vector<std::vector<int>> automorphisms(const FinGroup& g,
                                            int bound = kDefaultIsoBound);

/// Aut(G) as a permutation group on G's elements.
FinGroup aut_group(const FinGroup& g, int bound = kDefaultIsoBound);

}  // namespace cgt

#endif
