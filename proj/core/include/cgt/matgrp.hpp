#ifndef CGT_MATGRP_HPP
#define CGT_MATGRP_HPP

#include "cgt/abelian.hpp"
#include "cgt/fingroup.hpp"

namespace cgt {

/// Square integer matrix of dimension n (entries exact).
struct SquareIntMatrix {
  int n = 0;
  std::vector<BigInt> a;

  SquareIntMatrix() = default;
  explicit SquareIntMatrix(int dim)
      : n(dim), a(static_cast<std::size_t>(dim) * dim) {
    if (dim < 1) throw Error("dimension must be positive");
  }

  BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static SquareIntMatrix identity(int n);
  static SquareIntMatrix elementary(int n, int i, int j, const BigInt& t);
  /// diag(1,…,1,−1).
  static SquareIntMatrix d_neg(int n);

  SquareIntMatrix mul(const SquareIntMatrix& rhs) const;
  BigInt determinant() const;
  bool operator==(const SquareIntMatrix&) const = default;
  auto operator<=>(const SquareIntMatrix&) const = default;
};

/// One factor of an elementary-matrix word: e_{ij}(t), or d(−1).
struct ElemFactor {
  bool is_dneg = false;
  int i = 0;
  int j = 0;
  BigInt t;
};
using ElementaryWord = std::vector<ElemFactor>;

SquareIntMatrix evaluate_elementary(const ElementaryWord& w, int n);

/// |GL_n(F_q)| = ∏_{k=0}^{n−1}(q^n − q^k); q must be a prime power.
BigInt gl_order(int n, long long q);
/// |SL_n(F_q)| = q^{n−1} ∏_{k=0}^{n−2}(q^n − q^k).
BigInt sl_order(int n, long long q);

/// Writes det-1 M as a product of e_{ij}(t) factors (Euclidean descent
/// on rows/columns). Throws Error unless det M = 1.
ElementaryWord decompose_sln_z(const SquareIntMatrix& m);

/// det ±1; appends a single trailing d(−1) factor in the −1 case.
ElementaryWord decompose_gln_z(const SquareIntMatrix& m);

/// Word over A = [[0,1],[−1,0]], B = [[1,1],[0,1]] evaluating to a
/// det-1 2×2 matrix. Letters 'A'/'B' with integer exponents.
struct ABFactor {
  char letter = 'A';
  long long exp = 0;
};
using ABWord = std::vector<ABFactor>;

SquareIntMatrix evaluate_ab(const ABWord& w);
ABWord sl2_to_ab(const SquareIntMatrix& m);

/// Checks [e_{ij}(λ), e_{jk}(μ)] = e_{ik}(λμ) by exact multiplication
/// (i, j, k pairwise distinct, n ≥ 3).
bool elementary_commutator_check(int n, int i, int j, int k, const BigInt& lam,
                                 const BigInt& mu);

/// Upper unitriangular group UT_n(Z_p) of order p^{n(n−1)/2}.
FinGroup ut_sylow(int n, long long p, std::size_t bound = kDefaultClosureBound);

/// GL_n(Z_p) materialized for the finite-group engine.
FinGroup gl_as_fingroup(int n, long long p,
                        std::size_t bound = kDefaultClosureBound);
/// SL_n(Z_p).
FinGroup sl_as_fingroup(int n, long long p,
                        std::size_t bound = kDefaultClosureBound);

}  // namespace cgt

#endif
