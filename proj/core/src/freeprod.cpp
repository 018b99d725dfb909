#include "cgt/freeprod.hpp"

namespace cgt {

void validate_fp_word(const std::vector<FinGroup>& factors, const FPWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& s = w[i];
    if (s.factor < 0 || s.factor >= static_cast<int>(factors.size()))
      throw Error("syllable factor index out of range");
    const FinGroup& g = factors[s.factor];
    if (s.elem < 0 || s.elem >= g.order())
      throw Error("syllable element index out of range");
    if (s.elem == g.identity())
      throw Error("identity syllable in alternating word");
    if (i > 0 && w[i - 1].factor == s.factor)
      throw Error("adjacent syllables from the same factor");
  }
}

FPWord free_product_multiply(const std::vector<FinGroup>& factors,
                             const FPWord& u, const FPWord& v) {
  validate_fp_word(factors, u);
  validate_fp_word(factors, v);
  FPWord out = u;
  for (std::size_t i = 0; i < v.size(); ++i) {
    FPSyllable s = v[i];
    if (!out.empty() && out.back().factor == s.factor) {
      const FinGroup& g = factors[s.factor];
      const int prod = g.mul(out.back().elem, s.elem);
      out.pop_back();
      if (prod != g.identity()) {
        out.push_back(FPSyllable{s.factor, prod});
      }
      // deletion may expose a new same-factor boundary with v[i+1]; the
      // loop handles it because we always test against out.back()
    } else {
      out.push_back(s);
    }
  }
  return out;
}

FPWord free_product_inverse(const std::vector<FinGroup>& factors,
                            const FPWord& u) {
  validate_fp_word(factors, u);
  FPWord out;
  for (auto it = u.rbegin(); it != u.rend(); ++it)
    out.push_back(FPSyllable{it->factor, factors[it->factor].inv(it->elem)});
  return out;
}

}  // namespace cgt
