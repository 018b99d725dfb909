#ifndef CGT_ABELIAN_HPP
#define CGT_ABELIAN_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "cgt/fingroup.hpp"

namespace cgt {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact arbitrary-precision entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {
    if (r < 1 || c < 1) throw Error("matrix dimensions must be positive");
  }

  BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static IntMatrix identity(int n);
  IntMatrix mul(const IntMatrix& rhs) const;
  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;
};

/// Exact determinant (Bareiss fraction-free elimination).
BigInt det(const IntMatrix& m);

/// gcd of the entries; 0 for the zero vector.
BigInt content(const std::vector<BigInt>& v);

/// U·M·V = diag(a_1,…,a_k,0,…) with a_i | a_{i+1}, det U = ±1,
/// det V = ±1. Divisibility-chain diagonal form of M.
struct StackedBasis {
  IntMatrix u;
  IntMatrix v;
  std::vector<BigInt> diagonal;  // nonzero invariants, chain a_i | a_{i+1}
};

/// Throws Error on the all-zero matrix.
StackedBasis stacked_basis(const IntMatrix& m);

/// Torsion factors n_1 | n_2 | … (each > 1) and free rank of
/// ⟨generators | relations⟩ for an abelian group presented by a
/// relation matrix (one relation per row, one column per generator).
struct InvariantFactors {
  std::vector<BigInt> torsion;
  int rank = 0;

  bool operator==(const InvariantFactors&) const = default;
};

/// Zero matrix allowed (purely free group of rank = generators).
InvariantFactors invariant_factors(const IntMatrix& relations);

/// Invariant factors of a finite abelian group, by repeatedly splitting
/// off a maximal-order cyclic direct summand (per prime, via quotients).
/// Throws Error if g is not abelian.
InvariantFactors decompose_finite_abelian(const FinGroup& g);

/// For each prime p | |G|, the unique Sylow p-subgroup of abelian G.
std::vector<std::pair<long long, Subgroup>> primary_decomposition(
    const FinGroup& g);

long long euler_phi(long long n);

/// Order of x^k when x has order n: n / gcd(n, k).
long long power_order(long long n, long long k);

/// The unique subgroup of order d in C_n = gp{x}: gp{x^(n/d)}.
struct CyclicSubgroupInfo {
  long long generator_exponent = 0;  // n/d
  long long order = 0;               // d
  long long generator_count = 0;     // Φ(d)
};
CyclicSubgroupInfo cyclic_subgroup_of_order(long long n, long long d);

}  // namespace cgt

#endif
