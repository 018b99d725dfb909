#ifndef CGT_GROUPSPEC_HPP
#define CGT_GROUPSPEC_HPP

#include <string>

#include "cgt/fingroup.hpp"

namespace cgt {

/// Builds a FinGroup from a textual spec:
///   C12  S4  A5  D6  Q8  V4  GL(2,3)  SL(2,3)
///   prod(C2,C12)  sd(C3,C2,inv)  sd(C3,C2,triv)  hol(C3)  wr(C2,C2)
///   perm[(1 2),(1 2 3)]
/// Nesting is allowed wherever a sub-spec appears. Throws ParseError on
/// bad syntax and BoundError when the result would exceed `bound`.
FinGroup build_group(const std::string& spec,
                     std::size_t bound = kDefaultClosureBound);

}  // namespace cgt

#endif
