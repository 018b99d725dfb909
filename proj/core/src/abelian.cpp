#include "cgt/abelian.hpp"

#include <algorithm>
#include <numeric>

#include "cgt/subgroups.hpp"

namespace cgt {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
  if (cols != rhs.rows) throw Error("matrix shape mismatch");
  IntMatrix r(rows, rhs.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < rhs.cols; ++j)
        r.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const BigInt& x) { return x == 0; });
}

BigInt det(const IntMatrix& m) {
  if (m.rows != m.cols) throw Error("determinant of non-square matrix");
  const int n = m.rows;
  IntMatrix w = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

BigInt content(const std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const BigInt& x : v) g = gcd(g, x);
  return abs(g);
}

namespace {

struct Reduction {
  IntMatrix d, u, v;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const BigInt& q) {  // row dst += q * row src
    for (int c = 0; c < d.cols; ++c) d.at(dst, c) += q * d.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += q * u.at(src, c);
  }
  void add_col(int dst, int src, const BigInt& q) {
    for (int r = 0; r < d.rows; ++r) d.at(r, dst) += q * d.at(r, src);
    for (int r = 0; r < v.rows; ++r) v.at(r, dst) += q * v.at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  // (row i, row j) <- (a·row i + b·row j, c·row i + e·row j), ae − bc = ±1.
  void rot_rows(int i, int j, const BigInt& a, const BigInt& b,
                const BigInt& c, const BigInt& e) {
    for (IntMatrix* m : {&d, &u})
      for (int col = 0; col < m->cols; ++col) {
        BigInt x = m->at(i, col), y = m->at(j, col);
        m->at(i, col) = a * x + b * y;
        m->at(j, col) = c * x + e * y;
      }
  }
  void rot_cols(int i, int j, const BigInt& a, const BigInt& b,
                const BigInt& c, const BigInt& e) {
    for (IntMatrix* m : {&d, &v})
      for (int row = 0; row < m->rows; ++row) {
        BigInt x = m->at(row, i), y = m->at(row, j);
        m->at(row, i) = a * x + b * y;
        m->at(row, j) = c * x + e * y;
      }
  }
};

// a·x + b·y = g = gcd(x, y) ≥ 0.
struct Egcd {
  BigInt g, a, b;
};
Egcd egcd(const BigInt& x, const BigInt& y) {
  BigInt old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

}  // namespace

StackedBasis stacked_basis(const IntMatrix& m) {
  if (m.is_zero()) throw Error("stacked basis of the zero matrix");
  Reduction r{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  const int k = std::min(m.rows, m.cols);

  for (int t = 0; t < k; ++t) {
    // Pivot: minimal nonzero absolute value in the trailing block (the
    // "least content" element of the proof), row-major tie break.
    auto find_pivot = [&]() -> std::pair<int, int> {
      int pi = -1, pj = -1;
      for (int i = t; i < m.rows; ++i)
        for (int j = t; j < m.cols; ++j)
          if (r.d.at(i, j) != 0 &&
              (pi < 0 || abs(r.d.at(i, j)) < abs(r.d.at(pi, pj)))) {
            pi = i;
            pj = j;
          }
      return {pi, pj};
    };
    {
      auto [pi, pj] = find_pivot();
      if (pi < 0) break;  // trailing block vanished
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);
    }

    // Clear the pivot cross. Exact multiples are subtracted directly; a
    // non-multiple is absorbed with one extended-gcd rotation, which
    // strictly shrinks the pivot to the pair gcd, so this terminates.
    // (Single rotations, rather than remainder-swap chains, keep the
    // intermediate entries from compounding.)
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = t + 1; i < m.rows; ++i) {
        const BigInt& x = r.d.at(t, t);
        const BigInt& y = r.d.at(i, t);
        if (y == 0) continue;
        if (x != 0 && y % x == 0) {
          r.add_row(i, t, -(y / x));
        } else {
          Egcd e = egcd(x, y);
          r.rot_rows(t, i, e.a, e.b, -(y / e.g), x / e.g);
        }
      }
      for (int j = t + 1; j < m.cols; ++j) {
        const BigInt& x = r.d.at(t, t);
        const BigInt& y = r.d.at(t, j);
        if (y == 0) continue;
        if (x != 0 && y % x == 0) {
          r.add_col(j, t, -(y / x));
        } else {
          Egcd e = egcd(x, y);
          r.rot_cols(t, j, e.a, e.b, -(y / e.g), x / e.g);
          dirty = true;  // the rotation can repopulate column t below
        }
      }
      if (!dirty) {
        // Divisibility repair: pull an offending column into the pivot
        // column and rerun the Euclidean steps.
        for (int i = t + 1; i < m.rows && !dirty; ++i)
          for (int j = t + 1; j < m.cols && !dirty; ++j)
            if (r.d.at(i, j) % r.d.at(t, t) != 0) {
              r.add_col(t, j, 1);
              dirty = true;
            }
      }
    }
    if (r.d.at(t, t) < 0) r.negate_row(t);
  }

  StackedBasis sb;
  sb.u = std::move(r.u);
  sb.v = std::move(r.v);
  for (int t = 0; t < k; ++t) {
    if (r.d.at(t, t) == 0) break;
    sb.diagonal.push_back(r.d.at(t, t));
  }
  // Postconditions on the transform itself.
  BigInt du = det(sb.u), dv = det(sb.v);
  if (du * du != 1 || dv * dv != 1)
    throw VerifyError("basis-change matrices are not unimodular");
  IntMatrix check = sb.u.mul(m).mul(sb.v);
  for (int i = 0; i < check.rows; ++i)
    for (int j = 0; j < check.cols; ++j) {
      const BigInt expect =
          (i == j && i < static_cast<int>(sb.diagonal.size()))
              ? sb.diagonal[i]
              : BigInt(0);
      if (check.at(i, j) != expect)
        throw VerifyError("U*M*V is not the computed diagonal");
    }
  for (std::size_t i = 0; i + 1 < sb.diagonal.size(); ++i)
    if (sb.diagonal[i + 1] % sb.diagonal[i] != 0)
      throw VerifyError("diagonal violates the divisibility chain");
  return sb;
}

InvariantFactors invariant_factors(const IntMatrix& relations) {
  InvariantFactors inv;
  if (relations.is_zero()) {
    inv.rank = relations.cols;
    return inv;
  }
  StackedBasis sb = stacked_basis(relations);
  inv.rank = relations.cols - static_cast<int>(sb.diagonal.size());
  for (const BigInt& a : sb.diagonal)
    if (a > 1) inv.torsion.push_back(a);
  return inv;
}

std::vector<std::pair<long long, Subgroup>> primary_decomposition(
    const FinGroup& g) {
  if (!g.is_abelian()) throw Error("group is not abelian");
  std::vector<std::pair<long long, Subgroup>> out;
  for (auto [p, e] : factorize(g.order())) {
    Subgroup s;
    for (int x = 0; x < g.order(); ++x) {
      long long o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) s.elements.push_back(x);
    }
    out.emplace_back(p, std::move(s));
  }
  return out;
}

InvariantFactors decompose_finite_abelian(const FinGroup& g) {
  if (!g.is_abelian()) throw Error("group is not abelian");
  // Per prime: split off maximal-order cyclic summands by passing to
  // the quotient, recording the orders removed.
  std::vector<std::vector<long long>> partitions;  // descending p-power lists
  for (auto& [p, syl] : primary_decomposition(g)) {
    FinGroup q = sub_to_group(g, syl, nullptr);
    std::vector<long long> parts;
    while (q.order() > 1) {
      int best = 0;
      for (int x = 0; x < q.order(); ++x)
        if (q.element_order(x) > q.element_order(best)) best = x;
      parts.push_back(q.element_order(best));
      q = quotient(q, span_of(q, {best}));
    }
    partitions.push_back(std::move(parts));
  }
  std::size_t depth = 0;
  for (const auto& p : partitions) depth = std::max(depth, p.size());
  InvariantFactors inv;
  for (std::size_t j = 0; j < depth; ++j) {  // j = 0 pairs the largest parts
    BigInt f = 1;
    for (const auto& parts : partitions)
      if (j < parts.size()) f *= parts[j];
    inv.torsion.push_back(f);
  }
  std::reverse(inv.torsion.begin(), inv.torsion.end());  // ascending chain
  BigInt product = 1;
  for (const BigInt& f : inv.torsion) product *= f;
  if (product != g.order())
    throw VerifyError("invariant factors do not multiply to |G|");
  return inv;
}

long long euler_phi(long long n) {
  if (n < 1) throw Error("Euler phi needs n >= 1");
  long long phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

long long power_order(long long n, long long k) {
  if (n < 1 || k < 1) throw Error("power_order needs n, k >= 1");
  return n / std::gcd(n, k);
}

CyclicSubgroupInfo cyclic_subgroup_of_order(long long n, long long d) {
  if (n < 1 || d < 1 || n % d != 0)
    throw Error("d must divide n");
  return CyclicSubgroupInfo{n / d, d, euler_phi(d)};
}

}  // namespace cgt
