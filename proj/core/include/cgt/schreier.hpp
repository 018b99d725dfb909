#ifndef CGT_SCHREIER_HPP
#define CGT_SCHREIER_HPP

#include "cgt/perm.hpp"
#include "cgt/word.hpp"

namespace cgt {

/// Coset table of H = φ⁻¹(K) ≤ F_n, where φ sends the i-th free
/// generator to images[i] and K is a subgroup of the image closure.
/// Coset 0 is H itself; the transversal is shortlex-minimal per coset
/// (letter order x₁ < x₁⁻¹ < x₂ < …) and is therefore a Schreier
/// system: every suffix of a transversal word is a transversal word.
struct CosetTable {
  int rank = 0;
  int coset_count = 0;
  std::vector<Word> transversal;

  /// step[c][2·letter + d] with d = 0 for x, 1 for x⁻¹: coset of x^{±1}·t_c.
  std::vector<std::vector<int>> step;

  /// Nonempty reduced words φ(xt)⁻¹xt, one per (letter, coset) pair that
  /// yields a nontrivial element; free generators of H.
  struct SchreierGen {
    int letter = 0;
    int coset = 0;
    Word word{1};
  };
  std::vector<SchreierGen> gens;

  /// gen_lookup[letter][coset]: index into gens, or -1 when φ(xt)⁻¹xt
  /// reduces to the empty word.
  std::vector<std::vector<int>> gen_lookup;

  /// Coset reached by a word (coset of w·H, i.e. of φ(w)·K).
  int coset_of(const Word& w) const;

  bool in_subgroup(const Word& w) const { return coset_of(w) == 0; }
};

/// Builds the coset table. K is given by its elements (permutations);
/// when empty the trivial subgroup is used, so H is the kernel of the
/// induced coset action. K must be a subgroup of the image closure.
CosetTable coset_table(int rank, const std::vector<Permutation>& images,
                       const std::vector<Permutation>& k = {},
                       std::size_t bound = 20000);

/// The free generators φ(xt)⁻¹xt of H (Nielsen–Schreier). For trivial
/// K there are exactly j(n−1)+1 of them, j the coset count.
std::vector<Word> schreier_generators(const CosetTable& ct);

/// Expresses h ∈ H as a word over the Schreier generators (alphabet
/// size = gens.size()). Throws Error when h ∉ H. Expanding the result
/// with expand_generator_word recovers h.
Word rewrite_in_generators(const CosetTable& ct, const Word& h);

/// Substitutes each generator symbol by its X-word and reduces.
Word expand_generator_word(const CosetTable& ct, const Word& gen_word);

}  // namespace cgt

#endif
