#include "cgt/matgrp.hpp"

#include <algorithm>
#include <sstream>

#include "cgt/subgroups.hpp"

namespace cgt {

using boost::multiprecision::abs;

SquareIntMatrix SquareIntMatrix::identity(int n) {
  SquareIntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

SquareIntMatrix SquareIntMatrix::elementary(int n, int i, int j,
                                            const BigInt& t) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw Error("elementary matrix needs distinct in-range indices");
  SquareIntMatrix m = identity(n);
  m.at(i, j) = t;
  return m;
}

SquareIntMatrix SquareIntMatrix::d_neg(int n) {
  SquareIntMatrix m = identity(n);
  m.at(n - 1, n - 1) = -1;
  return m;
}

SquareIntMatrix SquareIntMatrix::mul(const SquareIntMatrix& rhs) const {
  if (n != rhs.n) throw Error("dimension mismatch");
  SquareIntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return r;
}

BigInt SquareIntMatrix::determinant() const {
  IntMatrix m(n, n);
  m.a = a;
  return det(m);
}

SquareIntMatrix evaluate_elementary(const ElementaryWord& w, int n) {
  SquareIntMatrix acc = SquareIntMatrix::identity(n);
  for (const ElemFactor& f : w)
    acc = acc.mul(f.is_dneg ? SquareIntMatrix::d_neg(n)
                            : SquareIntMatrix::elementary(n, f.i, f.j, f.t));
  return acc;
}

namespace {

bool is_prime_power(long long q, long long* p_out = nullptr) {
  auto f = factorize(q);
  if (f.size() != 1) return false;
  if (p_out) *p_out = f.front().first;
  return true;
}

}  // namespace

BigInt gl_order(int n, long long q) {
  if (n < 1 || q < 2 || !is_prime_power(q)) throw Error("q must be a prime power");
  BigInt qn = boost::multiprecision::pow(BigInt(q), n);
  BigInt acc = 1, qk = 1;
  for (int k = 0; k < n; ++k) {
    acc *= qn - qk;
    qk *= q;
  }
  return acc;
}

BigInt sl_order(int n, long long q) {
  if (n < 1 || q < 2 || !is_prime_power(q)) throw Error("q must be a prime power");
  // q^{n-1} ∏_{k=0}^{n-2}(q^n − q^k) = |GL_n| / (q−1)
  BigInt qn = boost::multiprecision::pow(BigInt(q), n);
  BigInt acc = boost::multiprecision::pow(BigInt(q), n - 1);
  BigInt qk = 1;
  for (int k = 0; k <= n - 2; ++k) {
    acc *= qn - qk;
    qk *= q;
  }
  return acc;
}

namespace {

// Bookkeeping for M = Lw · current · Rw with Lw, Rw elementary words.
struct Decomposer {
  SquareIntMatrix m;
  ElementaryWord left, right;  // left is built back-to-front conceptually

  // current ← e_{ij}(t) · current  (row i += t · row j)
  void row_op(int i, int j, const BigInt& t) {
    for (int c = 0; c < m.n; ++c) m.at(i, c) += t * m.at(j, c);
    left.push_back(ElemFactor{false, i, j, -t});  // appended: Lw gains e⁻¹ on its right
  }
  // current ← current · e_{ij}(t)  (col j += t · col i)
  void col_op(int i, int j, const BigInt& t) {
    for (int r = 0; r < m.n; ++r) m.at(r, j) += t * m.at(r, i);
    right.insert(right.begin(), ElemFactor{false, i, j, -t});  // Rw gains e⁻¹ on its left
  }
};

}  // namespace

ElementaryWord decompose_sln_z(const SquareIntMatrix& input) {
  if (input.determinant() != 1) throw Error("matrix is not in SL_n(Z)");
  const int n = input.n;
  Decomposer d{input, {}, {}};

  for (int t = 0; t + 1 < n; ++t) {
    // Column operations: Euclid on row t (entries at cols >= t) down to
    // a single ±1, then park it at column t with positive sign.
    while (true) {
      int nonzero = 0, pivot = -1;
      for (int j = t; j < n; ++j)
        if (d.m.at(t, j) != 0) {
          ++nonzero;
          if (pivot < 0 || abs(d.m.at(t, j)) < abs(d.m.at(t, pivot)))
            pivot = j;
        }
      if (nonzero == 0) throw VerifyError("singular row during descent");
      if (nonzero == 1) {
        if (abs(d.m.at(t, pivot)) != 1)
          throw VerifyError("row gcd is not 1");  // impossible for det 1
        break;
      }
      for (int j = t; j < n; ++j) {
        if (j == pivot || d.m.at(t, j) == 0) continue;
        BigInt q = d.m.at(t, j) / d.m.at(t, pivot);
        if (q != 0) d.col_op(pivot, j, -q);
      }
    }
    int pivot = -1;
    for (int j = t; j < n; ++j)
      if (d.m.at(t, j) != 0) pivot = j;
    if (pivot != t) {
      d.col_op(pivot, t, 1);     // copy into column t
      d.col_op(t, pivot, -1);    // clear the old position
      pivot = t;
    }
    if (d.m.at(t, t) < 0) {
      // (-1, 0) → (1, 0) in columns (t, j) without negation ops
      const int j = t + 1;
      d.col_op(t, j, 1);
      d.col_op(j, t, -2);
      d.col_op(t, j, 1);
    }
    // Row operations clear column t below the pivot.
    for (int i = t + 1; i < n; ++i)
      if (d.m.at(i, t) != 0) d.row_op(i, t, -d.m.at(i, t));
  }
  if (d.m.at(n - 1, n - 1) != 1)
    throw VerifyError("descent did not reach the identity");

  ElementaryWord out = d.left;
  out.insert(out.end(), d.right.begin(), d.right.end());
  if (!(evaluate_elementary(out, n) == input))
    throw VerifyError("elementary word does not reconstruct the input");
  return out;
}

ElementaryWord decompose_gln_z(const SquareIntMatrix& m) {
  const BigInt dt = m.determinant();
  if (dt == 1) return decompose_sln_z(m);
  if (dt != -1) throw Error("matrix is not in GL_n(Z)");
  ElementaryWord w = decompose_sln_z(m.mul(SquareIntMatrix::d_neg(m.n)));
  w.push_back(ElemFactor{true, 0, 0, 0});
  if (!(evaluate_elementary(w, m.n) == m))
    throw VerifyError("elementary word does not reconstruct the input");
  return w;
}

namespace {

SquareIntMatrix mat_a() {
  SquareIntMatrix a(2);
  a.at(0, 1) = 1;
  a.at(1, 0) = -1;
  return a;
}

SquareIntMatrix mat_b() {
  SquareIntMatrix b = SquareIntMatrix::identity(2);
  b.at(0, 1) = 1;
  return b;
}

SquareIntMatrix mat_pow(SquareIntMatrix base, long long k) {
  SquareIntMatrix acc = SquareIntMatrix::identity(base.n);
  while (k) {
    if (k & 1) acc = acc.mul(base);
    base = base.mul(base);
    k >>= 1;
  }
  return acc;
}

}  // namespace

SquareIntMatrix evaluate_ab(const ABWord& w) {
  SquareIntMatrix acc = SquareIntMatrix::identity(2);
  for (const ABFactor& f : w) {
    SquareIntMatrix base = f.letter == 'A' ? mat_a() : mat_b();
    long long e = f.exp;
    if (e < 0) {
      // det 1: inverse is [[d,-b],[-c,a]]
      SquareIntMatrix inv(2);
      inv.at(0, 0) = base.at(1, 1);
      inv.at(0, 1) = -base.at(0, 1);
      inv.at(1, 0) = -base.at(1, 0);
      inv.at(1, 1) = base.at(0, 0);
      base = inv;
      e = -e;
    }
    acc = acc.mul(mat_pow(base, e));
  }
  return acc;
}

ABWord sl2_to_ab(const SquareIntMatrix& m) {
  if (m.n != 2) throw Error("expected a 2x2 matrix");
  if (m.determinant() != 1) throw Error("matrix is not in SL_2(Z)");

  // Left factors in B and C = A⁻¹B⁻¹A: Euclid on the first column.
  struct BC {
    bool is_b;
    long long exp;
  };
  std::vector<BC> applied;  // in application order, leftmost applied last
  SquareIntMatrix cur = m;
  auto apply_b = [&](long long e) {  // row 0 += e · row 1
    cur.at(0, 0) += e * cur.at(1, 0);
    cur.at(0, 1) += e * cur.at(1, 1);
    applied.push_back(BC{true, e});
  };
  auto apply_c = [&](long long e) {  // row 1 += e · row 0
    cur.at(1, 0) += e * cur.at(0, 0);
    cur.at(1, 1) += e * cur.at(0, 1);
    applied.push_back(BC{false, e});
  };

  while (cur.at(1, 0) != 0) {
    if (cur.at(0, 0) == 0) {
      apply_b(1);  // a ← c
      continue;
    }
    BigInt q = cur.at(1, 0) / cur.at(0, 0);
    if (q != 0) {
      apply_c(-q.convert_to<long long>());
    } else {
      // |a| > |c| strictly fails only when reduction must move to a
      q = cur.at(0, 0) / cur.at(1, 0);
      apply_b(-q.convert_to<long long>());
    }
  }

  ABWord word;
  auto push = [&word](char letter, long long exp) {
    if (exp == 0) return;
    if (!word.empty() && word.back().letter == letter) {
      word.back().exp += exp;
      if (word.back().exp == 0) word.pop_back();
      return;
    }
    word.push_back(ABFactor{letter, exp});
  };
  // M = (applied_1)⁻¹ … (applied_k)⁻¹ · cur, with C^m = A⁻¹ B^{-m} A.
  for (const BC& f : applied) {
    if (f.is_b) {
      push('B', -f.exp);
    } else {
      push('A', -1);
      push('B', f.exp);
      push('A', 1);
    }
  }
  const long long b = cur.at(0, 1).convert_to<long long>();
  if (cur.at(0, 0) == 1) {
    push('B', b);
  } else {
    push('A', 2);  // A² = -I
    push('B', -b);
  }
  if (!(evaluate_ab(word) == m))
    throw VerifyError("A/B word does not reconstruct the input");
  return word;
}

bool elementary_commutator_check(int n, int i, int j, int k, const BigInt& lam,
                                 const BigInt& mu) {
  if (n < 3 || i == j || j == k || i == k)
    throw Error("need n >= 3 and pairwise distinct indices");
  auto e = [n](int a, int b, const BigInt& t) {
    return SquareIntMatrix::elementary(n, a, b, t);
  };
  const SquareIntMatrix x = e(i, j, lam), y = e(j, k, mu);
  const SquareIntMatrix comm =
      x.mul(y).mul(e(i, j, -lam)).mul(e(j, k, -mu));
  return comm == e(i, k, lam * mu);
}

namespace {

using ModMat = std::vector<int>;  // n*n entries in 0..p-1

ModMat modmat_identity(int n) {
  ModMat m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

ModMat modmat_mul(const ModMat& a, const ModMat& b, int n, long long p) {
  ModMat r(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int v = a[static_cast<std::size_t>(i) * n + k];
      if (!v) continue;
      for (int j = 0; j < n; ++j)
        r[static_cast<std::size_t>(i) * n + j] =
            static_cast<int>((r[static_cast<std::size_t>(i) * n + j] +
                              static_cast<long long>(v) *
                                  b[static_cast<std::size_t>(k) * n + j]) %
                             p);
    }
  return r;
}

std::string modmat_label(const ModMat& m, int n) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n; ++j) {
      if (j) os << ' ';
      os << m[static_cast<std::size_t>(i) * n + j];
    }
  }
  os << ']';
  return os.str();
}

long long modmat_det(const ModMat& m, int n, long long p) {
  IntMatrix w(n, n);
  for (std::size_t i = 0; i < m.size(); ++i) w.a[i] = m[i];
  BigInt d = det(w) % p;
  if (d < 0) d += p;
  return d.convert_to<long long>();
}

}  // namespace

FinGroup ut_sylow(int n, long long p, std::size_t bound) {
  if (n < 2 || !is_prime(p)) throw Error("need n >= 2 and p prime");
  std::vector<ModMat> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ModMat e = modmat_identity(n);
      e[static_cast<std::size_t>(i) * n + j] = 1;
      gens.push_back(std::move(e));
    }
  return closure(
      gens, modmat_identity(n),
      [n, p](const ModMat& a, const ModMat& b) { return modmat_mul(a, b, n, p); },
      [n](const ModMat& m) { return modmat_label(m, n); }, bound);
}

namespace {

FinGroup matgroup_over_zp(int n, long long p, std::size_t bound,
                          bool sl_only) {
  if (n < 1 || !is_prime(p)) throw Error("need p prime");
  double cells = 1;
  for (int i = 0; i < n * n; ++i) cells *= static_cast<double>(p);
  if (cells > 2e7) throw BoundError("matrix enumeration too large");

  std::vector<ModMat> elems;
  ModMat cur(static_cast<std::size_t>(n) * n, 0);
  while (true) {
    const long long d = modmat_det(cur, n, p);
    if (sl_only ? d == 1 : d != 0) elems.push_back(cur);
    int pos = 0;
    while (pos < n * n && ++cur[pos] == p) cur[pos++] = 0;
    if (pos == n * n) break;
  }
  if (elems.size() > bound) throw BoundError("matrix group exceeds bound");
  return closure(
      elems, modmat_identity(n),
      [n, p](const ModMat& a, const ModMat& b) { return modmat_mul(a, b, n, p); },
      [n](const ModMat& m) { return modmat_label(m, n); }, bound);
}

}  // namespace

FinGroup gl_as_fingroup(int n, long long p, std::size_t bound) {
  return matgroup_over_zp(n, p, bound, false);
}

FinGroup sl_as_fingroup(int n, long long p, std::size_t bound) {
  return matgroup_over_zp(n, p, bound, true);
}

}  // namespace cgt
