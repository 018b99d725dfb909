#include "cgt/groupspec.hpp"

#include <cctype>
#include <vector>

#include "cgt/constructions.hpp"
#include "cgt/matgrp.hpp"
#include "cgt/perm.hpp"

namespace cgt {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Splits "a,b,c" at top-level commas (ignoring commas inside (), []).
std::vector<std::string> split_args(const std::string& s,
                                    const std::string& whole) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in '" + whole + "'");
    if (c == ',' && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + whole + "'");
  out.push_back(strip(cur));
  return out;
}

long long parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) throw ParseError("expected a number in '" + whole + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a number, got '" + s + "' in '" + whole + "'");
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw ParseError("number out of range: '" + s + "'");
  }
}

FinGroup build(const std::string& raw, std::size_t bound);

FinGroup build_call(const std::string& head, const std::string& args,
                    const std::string& whole, std::size_t bound) {
  std::vector<std::string> parts = split_args(args, whole);
  if (head == "GL" || head == "SL") {
    if (parts.size() != 2)
      throw ParseError(head + " takes (n, p) in '" + whole + "'");
    int n = static_cast<int>(parse_int(parts[0], whole));
    long long p = parse_int(parts[1], whole);
    return head == "GL" ? gl_as_fingroup(n, p, bound)
                        : sl_as_fingroup(n, p, bound);
  }
  if (head == "prod") {
    if (parts.size() < 2)
      throw ParseError("prod needs at least two factors in '" + whole + "'");
    FinGroup g = build(parts[0], bound);
    for (std::size_t i = 1; i < parts.size(); ++i)
      g = direct_product(g, build(parts[i], bound), bound);
    return g;
  }
  if (head == "sd") {
    if (parts.size() != 3)
      throw ParseError("sd takes (H, K, action) in '" + whole + "'");
    FinGroup h = build(parts[0], bound);
    FinGroup k = build(parts[1], bound);
    SemidirectAction act;
    if (parts[2] == "inv")
      act = inversion_action(h, k);
    else if (parts[2] == "triv")
      act = trivial_action(h, k);
    else
      throw ParseError("unknown sd action '" + parts[2] +
                       "' (expected inv or triv)");
    return semidirect_product(h, k, act, bound);
  }
  if (head == "hol") {
    if (parts.size() != 1) throw ParseError("hol takes one group");
    return holomorph(build(parts[0], bound), bound);
  }
  if (head == "wr") {
    if (parts.size() != 2) throw ParseError("wr takes two groups");
    return wreath_restricted(build(parts[0], bound), build(parts[1], bound),
                             bound);
  }
  throw ParseError("unknown constructor '" + head + "' in '" + whole + "'");
}

FinGroup build(const std::string& raw, std::size_t bound) {
  const std::string s = strip(raw);
  if (s.empty()) throw ParseError("empty group spec");

  if (s == "Q8") return quaternion();
  if (s == "V4") return klein4();

  if (s.size() >= 2 &&
      (s[0] == 'C' || s[0] == 'S' || s[0] == 'A' || s[0] == 'D')) {
    bool all_digits = true;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) all_digits = false;
    if (all_digits) {
      int n = static_cast<int>(parse_int(s.substr(1), s));
      switch (s[0]) {
        case 'C':
          return cyclic(n, bound);
        case 'S':
          return symmetric(n, bound);
        case 'A':
          return alternating(n, bound);
        default:
          return dihedral(n);
      }
    }
  }

  if (s.rfind("perm[", 0) == 0) {
    if (s.back() != ']') throw ParseError("perm spec must end with ']'");
    const std::string inner = s.substr(5, s.size() - 6);
    std::vector<std::string> parts = split_args(inner, s);
    int degree = 0;
    for (const std::string& part : parts)
      if (!part.empty())
        degree = std::max(degree, parse_permutation(part).degree());
    std::vector<Permutation> gens;
    for (const std::string& part : parts)
      if (!part.empty()) gens.push_back(parse_permutation(part, degree));
    return perm_group(gens, bound);
  }

  const std::size_t open = s.find('(');
  if (open != std::string::npos && s.back() == ')')
    return build_call(s.substr(0, open), s.substr(open + 1, s.size() - open - 2),
                      s, bound);

  throw ParseError("cannot parse group spec '" + s + "'");
}

}  // namespace

FinGroup build_group(const std::string& spec, std::size_t bound) {
  return build(spec, bound);
}

}  // namespace cgt
