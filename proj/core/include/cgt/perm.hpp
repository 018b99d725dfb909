#ifndef CGT_PERM_HPP
#define CGT_PERM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cgt/error.hpp"

namespace cgt {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation of {1..n}. Points are 1-based in all I/O and cycle
/// notation; the internal image table is 0-based.
class Permutation {
 public:
  explicit Permutation(int degree = 1);                 // identity
  explicit Permutation(std::vector<int> images_1based); // [σ(1),…,σ(n)]

  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return static_cast<int>(img_.size()); }

  /// σ(point), 1-based.
  int apply(int point) const { return img_[point - 1] + 1; }

  /// 0-based image, no bounds check.
  int at0(int i) const { return img_[i]; }

  bool is_identity() const;

  /// (p*q)(i) = p(q(i)): the right factor acts first.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation power(long long k) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::vector<int> images_1based() const;

  std::string to_cycles() const;    // "(1 2 7)(3 5 4)", "()" for identity
  std::string to_oneline() const;   // "[2,7,5,3,4,6,1]"

 private:
  std::vector<int> img_;  // img_[i] = σ(i+1)-1
};

/// Cycle (i_1 … i_k), entries distinct, 1-based. Canonical form rotates
/// the smallest entry first.
struct Cycle {
  std::vector<int> entries;

  int length() const { return static_cast<int>(entries.size()); }
  Cycle canonical() const;
  bool operator==(const Cycle&) const = default;
};

/// Cycle type 1^{e_1} 2^{e_2} … n^{e_n} of a degree-n permutation,
/// fixed points included.
struct CycleType {
  int degree = 0;
  std::vector<int> multiplicities;  // multiplicities[i-1] = e_i

  bool operator==(const CycleType&) const = default;
};

/// Disjoint cycles of p, fixed points omitted, each cycle canonical,
/// sorted by smallest entry.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

/// Product of pairwise disjoint cycles as a degree-n permutation.
/// Throws Error on overlap or out-of-range entries.
Permutation from_cycles(const std::vector<Cycle>& cycles, int degree);

CycleType cycle_type(const Permutation& p);

int sign(const Permutation& p);           // +1 or -1
long long order(const Permutation& p);    // lcm of cycle lengths

/// θ with θ p θ⁻¹ = q, built by aligning canonical decompositions
/// (fixed points included); nullopt when the cycle types differ.
std::optional<Permutation> find_conjugator(const Permutation& p,
                                           const Permutation& q);

/// n! / (∏ e_i! · i^{e_i}): size of the conjugacy class in S_n.
BigInt conjugacy_class_size(const CycleType& ct);

/// (r−1)! · C(n, r): number of r-cycles in S_n.
BigInt count_r_cycles(int n, int r);

BigInt factorial(int n);

/// Parses "(1 2 7)(3 5 4)" or "[2,7,5,3,4,6,1]". For cycle notation the
/// degree is the largest point mentioned unless a larger one is given.
Permutation parse_permutation(const std::string& text, int min_degree = 0);

}  // namespace cgt

#endif
