#include "cgt/schreier.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cgt {

int CosetTable::coset_of(const Word& w) const {
  int c = 0;
  const auto& syls = w.syllables();
  // coset(x.w') = x applied to coset(w'): read right to left
  for (auto it = syls.rbegin(); it != syls.rend(); ++it) {
    const int dir = it->exp > 0 ? 0 : 1;
    long long reps = it->exp > 0 ? it->exp : -it->exp;
    while (reps--) c = step[c][2 * it->letter + dir];
  }
  return c;
}

CosetTable coset_table(int rank, const std::vector<Permutation>& images,
                       const std::vector<Permutation>& k, std::size_t bound) {
  if (rank < 1) throw Error("free rank must be positive");
  if (static_cast<int>(images.size()) != rank)
    throw Error("need one image per free generator");
  const int deg = images.front().degree();
  for (const auto& p : images)
    if (p.degree() != deg) throw Error("image degrees differ");

  // Closure of the images.
  std::set<Permutation> group;
  std::vector<Permutation> frontier{Permutation::identity(deg)};
  group.insert(frontier.front());
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (const auto& g : images) {
      Permutation p = frontier[i] * g;
      if (group.insert(p).second) {
        if (group.size() > bound) throw BoundError("image closure too large");
        frontier.push_back(std::move(p));
      }
    }

  std::vector<Permutation> kk = k;
  if (kk.empty()) kk.push_back(Permutation::identity(deg));
  for (const auto& p : kk) {
    if (p.degree() != deg) throw Error("K degree mismatch");
    if (!group.contains(p)) throw Error("K is not inside the image closure");
  }
  {
    std::set<Permutation> kset(kk.begin(), kk.end());
    for (const auto& a : kk)
      for (const auto& b : kk)
        if (!kset.contains(a * b.inverse()))
          throw Error("K is not a subgroup");
    kk.assign(kset.begin(), kset.end());
  }

  // Left coset gK identified by its minimal member.
  auto coset_key = [&kk](const Permutation& g) {
    Permutation best = g * kk.front();
    for (std::size_t i = 1; i < kk.size(); ++i)
      best = std::min(best, g * kk[i]);
    return best;
  };

  CosetTable ct;
  ct.rank = rank;
  std::map<Permutation, int> coset_id;
  std::vector<Permutation> rep;  // group element representing each coset

  const Permutation id = Permutation::identity(deg);
  coset_id[coset_key(id)] = 0;
  rep.push_back(id);
  ct.transversal.push_back(Word(rank));

  // Level-synchronous shortlex BFS: candidates of length L+1 are
  // x·t in lexicographic order (letter outer, previous-level coset in
  // discovery order inner).
  std::vector<int> level{0};
  while (!level.empty()) {
    std::vector<int> next;
    for (int dir = 0; dir < 2 * rank; ++dir) {
      const int letter = dir / 2;
      const bool inv = dir % 2;
      const Permutation& x = images[letter];
      for (int c : level) {
        Permutation g = (inv ? x.inverse() : x) * rep[c];
        Permutation key = coset_key(g);
        auto [it, fresh] = coset_id.emplace(key, static_cast<int>(rep.size()));
        if (fresh) {
          rep.push_back(g);
          ct.transversal.push_back(
              Word::letter(rank, letter, inv ? -1 : 1) * ct.transversal[c]);
          next.push_back(it->second);
        }
      }
    }
    level = std::move(next);
  }
  ct.coset_count = static_cast<int>(rep.size());

  ct.step.assign(ct.coset_count, std::vector<int>(2 * rank, -1));
  for (int c = 0; c < ct.coset_count; ++c)
    for (int dir = 0; dir < 2 * rank; ++dir) {
      const Permutation& x = images[dir / 2];
      Permutation g = (dir % 2 ? x.inverse() : x) * rep[c];
      ct.step[c][dir] = coset_id.at(coset_key(g));
    }

  // Schreier generators φ(xt)⁻¹ x t over positive letters.
  ct.gen_lookup.assign(rank, std::vector<int>(ct.coset_count, -1));
  for (int c = 0; c < ct.coset_count; ++c)
    for (int letter = 0; letter < rank; ++letter) {
      const int target = ct.step[c][2 * letter];
      Word w = ct.transversal[target].inverse() *
               Word::letter(rank, letter) * ct.transversal[c];
      if (w.empty()) continue;
      ct.gen_lookup[letter][c] = static_cast<int>(ct.gens.size());
      ct.gens.push_back(CosetTable::SchreierGen{letter, c, std::move(w)});
    }

  // Every generator must land in H.
  for (const auto& g : ct.gens)
    if (ct.coset_of(g.word) != 0)
      throw VerifyError("Schreier generator escapes the subgroup");
  return ct;
}

std::vector<Word> schreier_generators(const CosetTable& ct) {
  std::vector<Word> out;
  out.reserve(ct.gens.size());
  for (const auto& g : ct.gens) out.push_back(g.word);
  return out;
}

Word rewrite_in_generators(const CosetTable& ct, const Word& h) {
  if (ct.coset_of(h) != 0) throw Error("word is not in the subgroup");
  // Single-letter expansion x_1^{e_1}…x_k^{e_k}, e_i = ±1.
  std::vector<std::pair<int, int>> letters;  // (letter, ±1)
  for (const Syllable& s : h.syllables()) {
    const int d = s.exp > 0 ? 1 : -1;
    for (long long i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i)
      letters.emplace_back(s.letter, d);
  }
  const int n = static_cast<int>(letters.size());
  // Coset of each suffix: chain[i] = coset of letters[i..].
  std::vector<int> chain(n + 1);
  chain[n] = 0;
  for (int i = n - 1; i >= 0; --i) {
    const auto [letter, d] = letters[i];
    chain[i] = ct.step[chain[i + 1]][2 * letter + (d > 0 ? 0 : 1)];
  }
  const int alpha = static_cast<int>(ct.gens.size());
  std::vector<Syllable> raw;
  for (int i = 0; i < n; ++i) {
    const auto [letter, d] = letters[i];
    const int gi = d > 0 ? ct.gen_lookup[letter][chain[i + 1]]
                         : ct.gen_lookup[letter][chain[i]];
    if (gi >= 0) raw.push_back(Syllable{gi, d});
  }
  return Word(alpha, std::move(raw));
}

Word expand_generator_word(const CosetTable& ct, const Word& gen_word) {
  Word acc(ct.rank);
  for (const Syllable& s : gen_word.syllables()) {
    const Word& g = ct.gens.at(static_cast<std::size_t>(s.letter)).word;
    acc = acc * g.power(s.exp);
  }
  return acc;
}

}  // namespace cgt
