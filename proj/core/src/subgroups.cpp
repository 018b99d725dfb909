#include "cgt/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace cgt {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> f;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.emplace_back(d, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<Subgroup> all_subgroups(const FinGroup& g, int bound) {
  if (g.order() > bound)
    throw BoundError("subgroup enumeration bound exceeded: |G| = " +
                     std::to_string(g.order()));
  std::set<std::vector<int>> found;
  // Cyclic subgroups.
  for (int x = 0; x < g.order(); ++x)
    found.insert(span_of(g, {x}).elements);
  // Join closure. Every subgroup is reached: any H is built up from its
  // cyclic subgroups one join at a time.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        const auto& a = snapshot[i];
        const auto& b = snapshot[j];
        if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
            std::includes(b.begin(), b.end(), a.begin(), a.end()))
          continue;
        std::vector<int> gens = a;
        gens.insert(gens.end(), b.begin(), b.end());
        if (found.insert(span_of(g, gens).elements).second) grew = true;
      }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& e : found) out.push_back(Subgroup{e});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> maximal_subgroups(const FinGroup& g, int bound) {
  auto subs = all_subgroups(g, bound);
  subs.pop_back();  // drop G itself (last after sorting)
  std::vector<Subgroup> maximal;
  for (const auto& h : subs) {
    bool is_max = true;
    for (const auto& k : subs) {
      if (k.order() <= h.order() || k.elements == h.elements) continue;
      if (std::includes(k.elements.begin(), k.elements.end(),
                        h.elements.begin(), h.elements.end())) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(h);
  }
  return maximal;
}

Subgroup frattini(const FinGroup& g, int bound) {
  auto maximal = maximal_subgroups(g, bound);
  if (maximal.empty()) return full_subgroup(g);
  std::vector<int> acc = maximal.front().elements;
  for (std::size_t i = 1; i < maximal.size(); ++i) {
    std::vector<int> next;
    std::set_intersection(acc.begin(), acc.end(),
                          maximal[i].elements.begin(),
                          maximal[i].elements.end(),
                          std::back_inserter(next));
    acc = std::move(next);
  }
  return Subgroup{acc};
}

std::vector<Subgroup> sylow_subgroups(const FinGroup& g, long long p,
                                      int bound) {
  if (!is_prime(p) || g.order() % p != 0)
    throw Error("p must be a prime dividing the group order");
  long long pk = 1;
  long long m = g.order();
  while (m % p == 0) {
    m /= p;
    pk *= p;
  }
  std::vector<Subgroup> out;
  for (const auto& h : all_subgroups(g, bound))
    if (h.order() == pk) out.push_back(h);
  return out;
}

std::optional<Subgroup> hall_subgroup(const FinGroup& g, long long m,
                                      int bound) {
  if (m < 1 || g.order() % m != 0 || std::gcd(m, g.order() / m) != 1)
    throw Error("m must satisfy |G| = m*n with gcd(m,n)=1");
  if (m == 1) return trivial_subgroup(g);
  for (const auto& h : all_subgroups(g, bound))
    if (h.order() == m) return h;
  return std::nullopt;
}

}  // namespace cgt
