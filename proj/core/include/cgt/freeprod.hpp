#ifndef CGT_FREEPROD_HPP
#define CGT_FREEPROD_HPP

#include "cgt/fingroup.hpp"

namespace cgt {

/// Syllable of an alternating word in a free product: a non-identity
/// element of one factor; adjacent syllables come from distinct factors.
struct FPSyllable {
  int factor = 0;
  int elem = 0;

  bool operator==(const FPSyllable&) const = default;
};

using FPWord = std::vector<FPSyllable>;

/// Throws Error on identity syllables, out-of-range indices, or equal
/// adjacent factors.
void validate_fp_word(const std::vector<FinGroup>& factors, const FPWord& w);

/// Concatenation with cascading boundary merges: adjacent same-factor
/// syllables multiply in their factor, identity results are deleted and
/// the merge cascades.
FPWord free_product_multiply(const std::vector<FinGroup>& factors,
                             const FPWord& u, const FPWord& v);

FPWord free_product_inverse(const std::vector<FinGroup>& factors,
                            const FPWord& u);

}  // namespace cgt

#endif
