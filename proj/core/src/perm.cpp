#include "cgt/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cgt {

Permutation::Permutation(int degree) {
  if (degree < 1) throw Error("permutation degree must be positive");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images_1based) {
  const int n = static_cast<int>(images_1based.size());
  if (n < 1) throw Error("permutation degree must be positive");
  std::vector<char> seen(n, 0);
  img_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int v = images_1based[i];
    if (v < 1 || v > n) throw Error("image value out of range");
    if (seen[v - 1]) throw Error("image list is not a bijection");
    seen[v - 1] = 1;
    img_[i] = v - 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error("degree mismatch in composition");
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[i] = img_[rhs.img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Permutation Permutation::power(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Permutation acc(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::vector<int> Permutation::images_1based() const {
  std::vector<int> r(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r[i] = img_[i] + 1;
  return r;
}

Cycle Cycle::canonical() const {
  if (entries.empty()) throw Error("empty cycle");
  auto it = std::min_element(entries.begin(), entries.end());
  Cycle c;
  c.entries.insert(c.entries.end(), it, entries.end());
  c.entries.insert(c.entries.end(), entries.begin(), it);
  return c;
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  std::vector<Cycle> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    Cycle c;
    int x = s;
    do {
      seen[x] = 1;
      c.entries.push_back(x + 1);
      x = p.at0(x);
    } while (x != s);
    if (c.length() > 1) out.push_back(std::move(c));
  }
  return out;  // smallest entry leads each cycle; cycles sorted by it
}

Permutation from_cycles(const std::vector<Cycle>& cycles, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  for (const Cycle& c : cycles) {
    if (c.entries.empty()) throw Error("empty cycle");
    for (int e : c.entries) {
      if (e < 1 || e > degree) throw Error("cycle entry out of range");
      if (used[e - 1]) throw Error("cycles overlap");
      used[e - 1] = 1;
    }
    const int k = c.length();
    for (int i = 0; i < k; ++i)
      img[c.entries[i] - 1] = c.entries[(i + 1) % k] - 1;
  }
  std::vector<int> img1(degree);
  for (int i = 0; i < degree; ++i) img1[i] = img[i] + 1;
  return Permutation(img1);
}

CycleType cycle_type(const Permutation& p) {
  CycleType ct;
  ct.degree = p.degree();
  ct.multiplicities.assign(p.degree(), 0);
  std::vector<char> seen(p.degree(), 0);
  for (int s = 0; s < p.degree(); ++s) {
    if (seen[s]) continue;
    int len = 0, x = s;
    do {
      seen[x] = 1;
      ++len;
      x = p.at0(x);
    } while (x != s);
    ++ct.multiplicities[len - 1];
  }
  return ct;
}

int sign(const Permutation& p) {
  int transpositions = 0;
  for (const Cycle& c : cycle_decomposition(p))
    transpositions += c.length() - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

long long order(const Permutation& p) {
  long long l = 1;
  for (const Cycle& c : cycle_decomposition(p))
    l = std::lcm(l, static_cast<long long>(c.length()));
  return l;
}

std::optional<Permutation> find_conjugator(const Permutation& p,
                                           const Permutation& q) {
  if (p.degree() != q.degree()) throw Error("degree mismatch");
  if (cycle_type(p) != cycle_type(q)) return std::nullopt;
  const int n = p.degree();

  // Full decompositions including fixed points, grouped by length,
  // ascending entries break ties. θ maps the i-th point of p's
  // decomposition to the i-th point of q's.
  auto full = [n](const Permutation& s) {
    std::vector<std::vector<int>> by_len(n + 1);
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> cycles;
    for (int st = 0; st < n; ++st) {
      if (seen[st]) continue;
      std::vector<int> c;
      int x = st;
      do {
        seen[x] = 1;
        c.push_back(x);
        x = s.at0(x);
      } while (x != st);
      cycles.push_back(std::move(c));
    }
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) {
                       if (a.size() != b.size()) return a.size() < b.size();
                       return a[0] < b[0];
                     });
    return cycles;
  };

  auto cp = full(p), cq = full(q);
  std::vector<int> theta(n);
  for (std::size_t i = 0; i < cp.size(); ++i)
    for (std::size_t j = 0; j < cp[i].size(); ++j)
      theta[cp[i][j]] = cq[i][j];
  std::vector<int> img1(n);
  for (int i = 0; i < n; ++i) img1[i] = theta[i] + 1;
  return Permutation(img1);
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt conjugacy_class_size(const CycleType& ct) {
  const int n = ct.degree;
  long long check = 0;
  for (int i = 1; i <= n; ++i)
    check += static_cast<long long>(i) * ct.multiplicities[i - 1];
  if (check != n) throw Error("invalid cycle type");
  BigInt denom = 1;
  for (int i = 1; i <= n; ++i) {
    const int e = ct.multiplicities[i - 1];
    denom *= factorial(e);
    for (int k = 0; k < e; ++k) denom *= i;
  }
  return factorial(n) / denom;
}

BigInt count_r_cycles(int n, int r) {
  if (r < 1 || r > n) throw Error("cycle length out of range");
  // (r-1)! * C(n, r)
  BigInt binom = factorial(n) / (factorial(r) * factorial(n - r));
  return factorial(r - 1) * binom;
}

std::string Permutation::to_cycles() const {
  auto cycles = cycle_decomposition(*this);
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (const Cycle& c : cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      if (i) os << ' ';
      os << c.entries[i];
    }
    os << ')';
  }
  return os.str();
}

std::string Permutation::to_oneline() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ',';
    os << img_[i] + 1;
  }
  os << ']';
  return os.str();
}

Permutation parse_permutation(const std::string& text, int min_degree) {
  std::size_t pos = text.find_first_not_of(" \t");
  if (pos == std::string::npos) throw ParseError("empty permutation");

  if (text[pos] == '[') {
    std::vector<int> img;
    std::string body = text.substr(pos + 1);
    const std::size_t close = body.find(']');
    if (close == std::string::npos) throw ParseError("missing ']'");
    body = body.substr(0, close);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        img.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("bad image entry: '" + tok + "'");
      }
    }
    if (img.empty()) throw ParseError("empty image list");
    try {
      return Permutation(img);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }

  // cycle notation: "(1 2 7)(3 5 4)" or "()"
  std::vector<Cycle> cycles;
  int max_pt = min_degree;
  std::size_t i = pos;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw ParseError("missing ')'");
    std::istringstream is(text.substr(i + 1, close - i - 1));
    Cycle c;
    int v;
    while (is >> v) {
      if (v < 1) throw ParseError("cycle entries must be positive");
      c.entries.push_back(v);
      max_pt = std::max(max_pt, v);
    }
    if (!c.entries.empty()) cycles.push_back(std::move(c));
    i = close + 1;
  }
  if (max_pt < 1) max_pt = 1;
  try {
    return from_cycles(cycles, max_pt);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace cgt
