#ifndef CGT_WORD_HPP
#define CGT_WORD_HPP

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cgt/error.hpp"

namespace cgt {

/// One syllable x_i^m of a word; exponent nonzero in reduced form.
struct Syllable {
  int letter = 0;
  long long exp = 0;

  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

/// Reduced word over an alphabet of `alphabet_size` letters. The empty
/// word is the identity. Construction reduces; adjacent syllables of a
/// reduced word carry distinct letters and nonzero exponents.
class Word {
 public:
  explicit Word(int alphabet_size) : alpha_(alphabet_size) {}
  Word(int alphabet_size, std::vector<Syllable> raw);

  static Word letter(int alphabet_size, int letter, long long exp = 1);

  int alphabet_size() const { return alpha_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }

  /// l(w) = Σ |m_i|.
  long long length() const;

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word power(long long k) const;

  /// Exponent sum of one letter across the word.
  long long exponent_sum(int letter) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  /// "x^3 y^-2 x" with the given letter names; "1" for the empty word.
  std::string str(const std::vector<std::string>& names) const;

 private:
  int alpha_;
  std::vector<Syllable> syl_;
};

/// Unique reduced form of a raw syllable sequence (cascading merges).
Word reduce(int alphabet_size, const std::vector<Syllable>& raw);

/// Parses "x^3 y^-2 x" over named letters; `^1` optional.
Word parse_word(const std::string& text,
                const std::vector<std::string>& alphabet);

/// Default letter names x, y, z, w, then x5, x6, ...
std::vector<std::string> default_alphabet(int n);

/// (x^m y^{k+1})⁻¹ y x^m y^k, reduced: the (m,k) member of the free
/// generating set of the commutator subgroup of F_2.
Word commutator_generator(long long m, long long k);

using BigInt = boost::multiprecision::cpp_int;
using Mat2 = std::array<BigInt, 4>;  // row-major [[a,b],[c,d]]

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_identity();

/// Evaluates a reduced word over {x,y} at x = [[1,n],[0,1]],
/// y = [[1,0],[n,1]]. Requires n ≥ 2 (freeness regime).
Mat2 sl2_ping_pong(long long n, const Word& w);

}  // namespace cgt

#endif
