#include "cgt/constructions.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "cgt/morphisms.hpp"

namespace cgt {
namespace {

std::string power_label(const std::string& sym, int k) {
  if (k == 0) return "e";
  if (k == 1) return sym;
  return sym + "^" + std::to_string(k);
}

}  // namespace

FinGroup cyclic(int n, std::size_t bound) {
  if (n < 1) throw Error("cyclic group order must be positive");
  if (static_cast<std::size_t>(n) > bound)
    throw BoundError("cyclic group exceeds bound");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  std::vector<std::string> labels(n);
  for (int k = 0; k < n; ++k) labels[k] = power_label("x", k);
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  return FinGroup(std::move(labels), std::move(table), std::move(gens));
}

FinGroup perm_group(const std::vector<Permutation>& gens, std::size_t bound) {
  if (gens.empty()) {
    return FinGroup({"e"}, {0}, {});
  }
  const int deg = gens.front().degree();
  for (const auto& p : gens)
    if (p.degree() != deg) throw Error("generator degrees differ");
  return closure(
      gens, Permutation::identity(deg),
      [](const Permutation& a, const Permutation& b) { return a * b; },
      [](const Permutation& p) { return p.to_cycles(); }, bound);
}

FinGroup symmetric(int n, std::size_t bound) {
  if (n < 1) throw Error("degree must be positive");
  if (n == 1) return perm_group({}, bound);
  std::vector<Permutation> gens{from_cycles({Cycle{{1, 2}}}, n)};
  if (n > 2) {
    Cycle full;
    for (int i = 1; i <= n; ++i) full.entries.push_back(i);
    gens.push_back(from_cycles({full}, n));
  }
  return perm_group(gens, bound);
}

FinGroup alternating(int n, std::size_t bound) {
  if (n < 1) throw Error("degree must be positive");
  if (n <= 2) return perm_group({}, bound);
  std::vector<Permutation> gens{from_cycles({Cycle{{1, 2, 3}}}, n)};
  if (n > 3) {
    Cycle c;
    if (n % 2 == 1)
      for (int i = 1; i <= n; ++i) c.entries.push_back(i);
    else
      for (int i = 2; i <= n; ++i) c.entries.push_back(i);
    gens.push_back(from_cycles({c}, n));
  }
  return perm_group(gens, bound);
}

FinGroup dihedral(int n) {
  if (n < 3) throw Error("dihedral group requires n >= 3");
  const int m = 2 * n;
  // index a < n: σ^a; index n+a: σ^a τ
  auto idx = [n](int a, bool tau) { return ((a % n) + n) % n + (tau ? n : 0); };
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(idx(a, false)) * m + idx(b, false)] = idx(a + b, false);
      table[static_cast<std::size_t>(idx(a, false)) * m + idx(b, true)] = idx(a + b, true);
      table[static_cast<std::size_t>(idx(a, true)) * m + idx(b, false)] = idx(a - b, true);
      table[static_cast<std::size_t>(idx(a, true)) * m + idx(b, true)] = idx(a - b, false);
    }
  std::vector<std::string> labels(m);
  for (int a = 0; a < n; ++a) {
    labels[a] = power_label("σ", a);
    labels[n + a] = a == 0 ? "τ" : power_label("σ", a) + " τ";
  }
  return FinGroup(std::move(labels), std::move(table), {1, n});
}

FinGroup quaternion() {
  // 2x2 matrices over Z[i]; an entry is (re, im).
  using G = std::pair<int, int>;
  using Mat = std::array<G, 4>;
  auto gmul = [](G a, G b) {
    return G{a.first * b.first - a.second * b.second,
             a.first * b.second + a.second * b.first};
  };
  auto gadd = [](G a, G b) { return G{a.first + b.first, a.second + b.second}; };
  auto mmul = [&](const Mat& a, const Mat& b) {
    return Mat{gadd(gmul(a[0], b[0]), gmul(a[1], b[2])),
               gadd(gmul(a[0], b[1]), gmul(a[1], b[3])),
               gadd(gmul(a[2], b[0]), gmul(a[3], b[2])),
               gadd(gmul(a[2], b[1]), gmul(a[3], b[3]))};
  };
  const G zero{0, 0}, one{1, 0}, i{0, 1}, mone{-1, 0}, mi{0, -1};
  const Mat I{one, zero, zero, one};
  const Mat a{i, zero, zero, mi};
  const Mat b{zero, mone, one, zero};
  auto neg = [&](const Mat& x) {
    Mat r;
    for (int k = 0; k < 4; ++k) r[k] = G{-x[k].first, -x[k].second};
    return r;
  };
  const Mat c = mmul(a, b);
  auto label = [&](const Mat& x) -> std::string {
    if (x == I) return "I";
    if (x == neg(I)) return "-I";
    if (x == a) return "a";
    if (x == neg(a)) return "-a";
    if (x == b) return "b";
    if (x == neg(b)) return "-b";
    if (x == c) return "c";
    if (x == neg(c)) return "-c";
    return "?";
  };
  return closure(std::vector<Mat>{a, b}, I, mmul, label);
}

FinGroup klein4() {
  // {e,a,b,c}, every non-identity element of order 2, ab = c.
  std::vector<int> table{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  return FinGroup({"e", "a", "b", "c"}, std::move(table), {1, 2});
}

FinGroup direct_product(const FinGroup& g, const FinGroup& h,
                        std::size_t bound) {
  const std::size_t m = static_cast<std::size_t>(g.order()) * h.order();
  if (m > bound) throw BoundError("direct product exceeds bound");
  const int ho = h.order();
  auto idx = [ho](int a, int b) { return a * ho + b; };
  std::vector<int> table(m * m);
  for (int a1 = 0; a1 < g.order(); ++a1)
    for (int b1 = 0; b1 < ho; ++b1)
      for (int a2 = 0; a2 < g.order(); ++a2)
        for (int b2 = 0; b2 < ho; ++b2)
          table[static_cast<std::size_t>(idx(a1, b1)) * m + idx(a2, b2)] =
              idx(g.mul(a1, a2), h.mul(b1, b2));
  std::vector<std::string> labels(m);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < ho; ++b)
      labels[idx(a, b)] = "(" + g.label(a) + "," + h.label(b) + ")";
  std::vector<int> gens;
  for (int x : g.generators()) gens.push_back(idx(x, h.identity()));
  for (int y : h.generators()) gens.push_back(idx(g.identity(), y));
  return FinGroup(std::move(labels), std::move(table), std::move(gens));
}

SemidirectAction trivial_action(const FinGroup& h, const FinGroup& k) {
  std::vector<int> id(h.order());
  for (int i = 0; i < h.order(); ++i) id[i] = i;
  return SemidirectAction(k.order(), id);
}

SemidirectAction inversion_action(const FinGroup& h, const FinGroup& k) {
  if (!h.is_abelian()) throw Error("inversion action needs abelian H");
  std::vector<int> invmap(h.order());
  bool inv_trivial = true;
  for (int i = 0; i < h.order(); ++i) {
    invmap[i] = h.inv(i);
    if (invmap[i] != i) inv_trivial = false;
  }
  int gen = -1;
  for (int x = 0; x < k.order(); ++x)
    if (k.element_order(x) == k.order()) {
      gen = x;
      break;
    }
  if (gen < 0) throw Error("inversion action needs cyclic K");
  if (k.order() % 2 != 0 && !inv_trivial)
    throw Error("inversion action needs K of even order");
  SemidirectAction f(k.order());
  std::vector<int> id(h.order());
  for (int i = 0; i < h.order(); ++i) id[i] = i;
  // gen^j acts by inversion^j
  int x = k.identity();
  for (int j = 0; j < k.order(); ++j) {
    f[x] = (j % 2 == 0 || inv_trivial) ? id : invmap;
    x = k.mul(x, gen);
  }
  return f;
}

FinGroup semidirect_product(const FinGroup& h, const FinGroup& k,
                            const SemidirectAction& action,
                            std::size_t bound) {
  if (static_cast<int>(action.size()) != k.order())
    throw Error("action must give one automorphism per element of K");
  // Each f_k must be an automorphism of H.
  for (const auto& f : action) {
    if (static_cast<int>(f.size()) != h.order())
      throw Error("automorphism image vector has wrong size");
    std::vector<char> hit(h.order(), 0);
    for (int v : f) {
      if (v < 0 || v >= h.order() || hit[v])
        throw VerifyError("action image is not a bijection");
      hit[v] = 1;
    }
    for (int a = 0; a < h.order(); ++a)
      for (int b = 0; b < h.order(); ++b)
        if (f[h.mul(a, b)] != h.mul(f[a], f[b]))
          throw VerifyError("action image is not an automorphism");
  }
  // Compatibility with the product formula: f_{uv} = f_v ∘ f_u.
  for (int u = 0; u < k.order(); ++u)
    for (int v = 0; v < k.order(); ++v)
      for (int x = 0; x < h.order(); ++x)
        if (action[k.mul(u, v)][x] != action[v][action[u][x]])
          throw VerifyError("action is not a homomorphism");

  const std::size_t m = static_cast<std::size_t>(h.order()) * k.order();
  if (m > bound) throw BoundError("semidirect product exceeds bound");
  const int ko = k.order();
  auto idx = [ko](int x, int u) { return x * ko + u; };
  std::vector<int> table(m * m);
  for (int x1 = 0; x1 < h.order(); ++x1)
    for (int u1 = 0; u1 < ko; ++u1)
      for (int x2 = 0; x2 < h.order(); ++x2)
        for (int u2 = 0; u2 < ko; ++u2)
          table[static_cast<std::size_t>(idx(x1, u1)) * m + idx(x2, u2)] =
              idx(h.mul(action[u2][x1], x2), k.mul(u1, u2));
  std::vector<std::string> labels(m);
  for (int x = 0; x < h.order(); ++x)
    for (int u = 0; u < ko; ++u)
      labels[idx(x, u)] = "(" + h.label(x) + "," + k.label(u) + ")";
  std::vector<int> gens;
  for (int x : h.generators()) gens.push_back(idx(x, k.identity()));
  for (int u : k.generators()) gens.push_back(idx(h.identity(), u));
  return FinGroup(std::move(labels), std::move(table), std::move(gens));
}

FinGroup holomorph(const FinGroup& g, std::size_t bound) {
  auto autos = automorphisms(g);
  const int na = static_cast<int>(autos.size());
  const std::size_t m = static_cast<std::size_t>(g.order()) * na;
  if (m > bound) throw BoundError("holomorph exceeds bound");
  // index of a composed automorphism
  std::map<std::vector<int>, int> aidx;
  for (int i = 0; i < na; ++i) aidx[autos[i]] = i;
  auto idx = [na](int x, int a) { return x * na + a; };
  std::vector<int> table(m * m);
  for (int x = 0; x < g.order(); ++x)
    for (int a = 0; a < na; ++a)
      for (int y = 0; y < g.order(); ++y)
        for (int b = 0; b < na; ++b) {
          std::vector<int> comp(g.order());
          for (int t = 0; t < g.order(); ++t) comp[t] = autos[a][autos[b][t]];
          table[static_cast<std::size_t>(idx(x, a)) * m + idx(y, b)] =
              idx(g.mul(x, autos[a][y]), aidx.at(comp));
        }
  std::vector<std::string> labels(m);
  for (int x = 0; x < g.order(); ++x)
    for (int a = 0; a < na; ++a)
      labels[idx(x, a)] = "(" + g.label(x) + ",α" + std::to_string(a) + ")";
  return FinGroup(std::move(labels), std::move(table), {});
}

FinGroup wreath_restricted(const FinGroup& g, const FinGroup& h,
                           std::size_t bound) {
  const int go = g.order(), ho = h.order();
  std::size_t base = 1;
  for (int i = 0; i < ho; ++i) {
    base *= static_cast<std::size_t>(go);
    if (base * ho > bound) throw BoundError("wreath product exceeds bound");
  }
  const std::size_t m = base * ho;
  // base functions H → G encoded mixed-radix: f(x) = digits[x]
  auto decode = [&](std::size_t fi) {
    std::vector<int> f(ho);
    for (int x = 0; x < ho; ++x) {
      f[x] = static_cast<int>(fi % go);
      fi /= go;
    }
    return f;
  };
  auto encode = [&](const std::vector<int>& f) {
    std::size_t fi = 0;
    for (int x = ho - 1; x >= 0; --x) fi = fi * go + f[x];
    return fi;
  };
  std::vector<int> table(m * m);
  for (std::size_t fi = 0; fi < base; ++fi) {
    const auto f = decode(fi);
    for (int a = 0; a < ho; ++a)
      for (std::size_t gi = 0; gi < base; ++gi) {
        const auto gf = decode(gi);
        for (int b = 0; b < ho; ++b) {
          // (f,a)(g,b) = (f · g^a, ab), g^a(x) = g(x·a)
          std::vector<int> prod(ho);
          for (int x = 0; x < ho; ++x)
            prod[x] = g.mul(f[x], gf[h.mul(x, a)]);
          table[(fi * ho + a) * m + (gi * ho + b)] =
              static_cast<int>(encode(prod) * ho + h.mul(a, b));
        }
      }
  }
  std::vector<std::string> labels(m);
  for (std::size_t fi = 0; fi < base; ++fi) {
    const auto f = decode(fi);
    std::ostringstream os;
    os << "f:[";
    for (int x = 0; x < ho; ++x) {
      if (x) os << ',';
      os << g.label(f[x]);
    }
    os << "]|";
    for (int a = 0; a < ho; ++a)
      labels[fi * ho + a] = os.str() + h.label(a);
  }
  return FinGroup(std::move(labels), std::move(table), {});
}

}  // namespace cgt
