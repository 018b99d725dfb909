#include "cgt/action.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cgt/constructions.hpp"
#include "cgt/subgroups.hpp"

namespace cgt {

Action::Action(FinGroup group, int domain_size, std::vector<int> table)
    : group_(std::move(group)), domain_(domain_size), table_(std::move(table)) {
  if (domain_ < 0) throw Error("negative domain");
  if (table_.size() != static_cast<std::size_t>(group_.order()) * domain_)
    throw VerifyError("action table has wrong shape");
  for (int x = 0; x < domain_; ++x) {
    if (apply(group_.identity(), x) != x)
      throw VerifyError("identity does not act trivially");
  }
  for (int g = 0; g < group_.order(); ++g)
    for (int h = 0; h < group_.order(); ++h)
      for (int x = 0; x < domain_; ++x)
        if (apply(group_.mul(g, h), x) != apply(g, apply(h, x)))
          throw VerifyError("not a group action: (gh)(x) != g(h(x))");
}

std::vector<int> Action::orbit(int x) const {
  if (x < 0 || x >= domain_) throw Error("point out of range");
  std::vector<char> in(domain_, 0);
  std::vector<int> frontier{x};
  in[x] = 1;
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (int g = 0; g < group_.order(); ++g) {
      const int y = apply(g, frontier[i]);
      if (!in[y]) {
        in[y] = 1;
        frontier.push_back(y);
      }
    }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

Subgroup Action::stabilizer(int x) const {
  if (x < 0 || x >= domain_) throw Error("point out of range");
  Subgroup s;
  for (int g = 0; g < group_.order(); ++g)
    if (apply(g, x) == x) s.elements.push_back(g);
  return s;
}

std::vector<std::vector<int>> Action::orbits() const {
  std::vector<char> seen(domain_, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < domain_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit(x);
    for (int y : orb) seen[y] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

bool Action::is_transitive() const { return orbits().size() == 1; }

int Action::chi(int g) const {
  int fixed = 0;
  for (int x = 0; x < domain_; ++x)
    if (apply(g, x) == x) ++fixed;
  return fixed;
}

BurnsideReport burnside_count(const Action& a) {
  BurnsideReport rep;
  long long total = 0;
  for (int g = 0; g < a.group().order(); ++g) {
    rep.fixed_counts.push_back(a.chi(g));
    total += rep.fixed_counts.back();
  }
  if (total % a.group().order() != 0)
    throw VerifyError("sum of fixed points not divisible by |G|");
  rep.orbit_count = total / a.group().order();
  rep.orbits = a.orbits();
  if (static_cast<long long>(rep.orbits.size()) != rep.orbit_count)
    throw VerifyError("Burnside count disagrees with the orbit partition");
  return rep;
}

namespace {

// Compositions of e into k nonnegative parts, lexicographic.
std::vector<std::vector<int>> compositions(int e, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  // iterate: cur runs over all tuples summing to e
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == k - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, e);
  return out;
}

}  // namespace

Action factorization_action(long long n, int parts, std::size_t domain_bound) {
  if (n < 1 || parts < 1) throw Error("need n >= 1 and parts >= 1");
  auto primes = factorize(n);
  // Domain: one composition of each prime exponent; a point is a tuple
  // of composition choices, mixed-radix encoded.
  std::vector<std::vector<std::vector<int>>> comp_per_prime;
  std::size_t domain = 1;
  for (auto [p, e] : primes) {
    comp_per_prime.push_back(compositions(e, parts));
    domain *= comp_per_prime.back().size();
    if (domain > domain_bound)
      throw BoundError("factorization domain exceeds bound");
  }
  if (primes.empty()) domain = 1;

  FinGroup sk = symmetric(parts);
  // Recover each group element's point permutation from its label.
  std::vector<Permutation> elems;
  for (int i = 0; i < sk.order(); ++i) {
    const std::string& l = sk.label(i);
    elems.push_back(l == "e" || l == "()" ? Permutation::identity(parts)
                                          : parse_permutation(l, parts));
  }

  const int np = static_cast<int>(comp_per_prime.size());
  // index of a composition within its prime block
  std::vector<std::map<std::vector<int>, int>> comp_index(np);
  for (int pi = 0; pi < np; ++pi)
    for (std::size_t ci = 0; ci < comp_per_prime[pi].size(); ++ci)
      comp_index[pi][comp_per_prime[pi][ci]] = static_cast<int>(ci);

  auto act = [&](int g, int x) {
    const Permutation& sigma = elems[g];
    std::size_t rem = static_cast<std::size_t>(x);
    std::size_t result = 0, radix = 1;
    for (int pi = 0; pi < np; ++pi) {
      const auto& comps = comp_per_prime[pi];
      const auto& c = comps[rem % comps.size()];
      rem /= comps.size();
      // σ permutes the tuple slots; as a left action σ·c = c ∘ σ⁻¹
      std::vector<int> moved(parts);
      for (int i = 0; i < parts; ++i) moved[sigma.apply(i + 1) - 1] = c[i];
      result += static_cast<std::size_t>(comp_index[pi].at(moved)) * radix;
      radix *= comps.size();
    }
    return static_cast<int>(result);
  };
  return Action::make(std::move(sk), static_cast<int>(domain), act);
}

long long factorization_orbits(long long n, int parts,
                               std::size_t domain_bound) {
  return burnside_count(factorization_action(n, parts, domain_bound))
      .orbit_count;
}

CosetAction coset_action(const FinGroup& g, const Subgroup& h) {
  auto blocks = cosets(g, h, CosetSide::Left);
  const int n = static_cast<int>(blocks.size());
  std::vector<int> block_of(g.order());
  for (int b = 0; b < n; ++b)
    for (int x : blocks[b]) block_of[x] = b;
  auto act = [&](int a, int b) { return block_of[g.mul(a, blocks[b].front())]; };
  Action action = Action::make(g, n, act);
  Subgroup kernel;
  for (int a = 0; a < g.order(); ++a) {
    bool fixes_all = true;
    for (int b = 0; b < n && fixes_all; ++b)
      fixes_all = action.apply(a, b) == b;
    if (fixes_all) kernel.elements.push_back(a);
  }
  return CosetAction{std::move(action), std::move(kernel), std::move(blocks)};
}

}  // namespace cgt
