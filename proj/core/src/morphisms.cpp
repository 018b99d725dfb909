#include "cgt/morphisms.hpp"

#include <algorithm>
#include <sstream>

namespace cgt {
namespace {

// Extends the partial map gen[i] -> image[i] to all of g by following
// the Cayley graph, then checks it is a bijective homomorphism into h.
// Returns the full image vector or empty on failure.
std::vector<int> extend_hom(const FinGroup& g, const std::vector<int>& gens,
                            const FinGroup& h, const std::vector<int>& images) {
  std::vector<int> f(g.order(), -1);
  f[g.identity()] = h.identity();
  std::vector<int> frontier{g.identity()};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const int x = frontier[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = g.mul(x, gens[k]);
      const int fy = h.mul(f[x], images[k]);
      if (f[y] < 0) {
        f[y] = fy;
        frontier.push_back(y);
      } else if (f[y] != fy) {
        return {};
      }
    }
  }
  if (static_cast<int>(frontier.size()) != g.order()) return {};  // gens don't generate
  std::vector<char> hit(h.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (hit[f[x]]) return {};
    hit[f[x]] = 1;
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return {};
  return f;
}

// Backtracking over images of the generating set; calls sink for every
// isomorphism found. Stops early if sink returns false.
template <typename Sink>
void search_isos(const FinGroup& g, const FinGroup& h, Sink sink) {
  const std::vector<int> gens = small_generating_set(g);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const int ord = g.element_order(gens[k]);
    for (int y = 0; y < h.order(); ++y)
      if (h.element_order(y) == ord) candidates[k].push_back(y);
  }
  std::vector<int> pick(gens.size(), 0);
  std::vector<int> images(gens.size());
  // Plain product enumeration; candidate lists are tiny at this scale.
  const std::size_t depth = gens.size();
  std::vector<std::size_t> idx(depth, 0);
  while (true) {
    bool valid = true;
    for (std::size_t k = 0; k < depth; ++k) {
      if (idx[k] >= candidates[k].size()) {
        valid = false;
        break;
      }
      images[k] = candidates[k][idx[k]];
    }
    if (depth == 0) {
      auto f = extend_hom(g, gens, h, images);
      if (!f.empty()) sink(f);
      return;
    }
    if (valid) {
      auto f = extend_hom(g, gens, h, images);
      if (!f.empty() && !sink(f)) return;
    }
    // odometer
    std::size_t k = 0;
    while (k < depth) {
      if (++idx[k] < candidates[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == depth) return;
  }
}

}  // namespace

std::string fingerprint(const FinGroup& g) {
  std::ostringstream os;
  os << "o" << g.order() << (g.is_abelian() ? "a" : "n");
  os << "|ord:";
  for (auto [o, c] : g.order_histogram()) os << o << "^" << c << ",";
  std::vector<int> class_sizes;
  for (const auto& cls : conjugacy_classes(g))
    class_sizes.push_back(static_cast<int>(cls.size()));
  std::sort(class_sizes.begin(), class_sizes.end());
  os << "|cls:";
  for (int s : class_sizes) os << s << ",";
  return os.str();
}

std::vector<int> small_generating_set(const FinGroup& g) {
  if (g.order() == 1) return {};
  std::vector<int> by_order(g.order());
  for (int i = 0; i < g.order(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<int> gens{by_order.front()};
  Subgroup span = span_of(g, gens);
  while (span.order() < g.order()) {
    for (int x : by_order)
      if (!span.contains(x)) {
        gens.push_back(x);
        break;
      }
    span = span_of(g, gens);
  }
  return gens;
}

bool is_isomorphic(const FinGroup& g, const FinGroup& h, int bound) {
  if (g.order() != h.order()) return false;
  if (g.order() > bound)
    throw BoundError("isomorphism search bound exceeded: |G| = " +
                     std::to_string(g.order()));
  if (fingerprint(g) != fingerprint(h)) return false;
  bool found = false;
  search_isos(g, h, [&](const std::vector<int>&) {
    found = true;
    return false;  // stop at the first witness
  });
  return found;
}

std::vector<std::vector<int>> automorphisms(const FinGroup& g, int bound) {
  if (g.order() > bound)
    throw BoundError("automorphism search bound exceeded: |G| = " +
                     std::to_string(g.order()));
  std::vector<std::vector<int>> autos;
  search_isos(g, g, [&](const std::vector<int>& f) {
    autos.push_back(f);
    return true;
  });
  std::sort(autos.begin(), autos.end());
  return autos;
}

FinGroup aut_group(const FinGroup& g, int bound) {
  auto autos = automorphisms(g, bound);
  using Pm = std::vector<int>;
  Pm id(g.order());
  for (int i = 0; i < g.order(); ++i) id[i] = i;
  auto compose = [](const Pm& a, const Pm& b) {
    Pm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
  };
  auto label = [&g](const Pm& a) {
    // cycle notation on element indices
    std::ostringstream os;
    std::vector<char> seen(a.size(), 0);
    bool any = false;
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (seen[s] || a[s] == static_cast<int>(s)) continue;
      any = true;
      os << '(';
      std::size_t x = s;
      bool first = true;
      do {
        seen[x] = 1;
        if (!first) os << ' ';
        first = false;
        os << g.label(static_cast<int>(x));
        x = static_cast<std::size_t>(a[x]);
      } while (x != s);
      os << ')';
    }
    return any ? os.str() : std::string("id");
  };
  return closure(autos, id, compose, label);
}

}  // namespace cgt
