#include "cgt/word.hpp"

#include <sstream>

namespace cgt {

Word::Word(int alphabet_size, std::vector<Syllable> raw) : alpha_(alphabet_size) {
  for (const Syllable& s : raw) {
    if (s.letter < 0 || s.letter >= alpha_)
      throw Error("letter index out of alphabet");
    if (s.exp == 0) continue;
    if (!syl_.empty() && syl_.back().letter == s.letter) {
      syl_.back().exp += s.exp;
      if (syl_.back().exp == 0) syl_.pop_back();  // cascade
    } else {
      syl_.push_back(s);
    }
  }
}

Word Word::letter(int alphabet_size, int letter, long long exp) {
  return Word(alphabet_size, {Syllable{letter, exp}});
}

long long Word::length() const {
  long long l = 0;
  for (const Syllable& s : syl_) l += s.exp < 0 ? -s.exp : s.exp;
  return l;
}

Word Word::operator*(const Word& rhs) const {
  if (alpha_ != rhs.alpha_) throw Error("alphabet mismatch");
  std::vector<Syllable> raw = syl_;
  raw.insert(raw.end(), rhs.syl_.begin(), rhs.syl_.end());
  return Word(alpha_, std::move(raw));
}

Word Word::inverse() const {
  std::vector<Syllable> raw;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
    raw.push_back(Syllable{it->letter, -it->exp});
  return Word(alpha_, std::move(raw));
}

Word Word::power(long long k) const {
  Word base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Word acc(alpha_);
  while (e--) acc = acc * base;
  return acc;
}

long long Word::exponent_sum(int letter) const {
  long long s = 0;
  for (const Syllable& syl : syl_)
    if (syl.letter == letter) s += syl.exp;
  return s;
}

std::string Word::str(const std::vector<std::string>& names) const {
  if (syl_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : syl_) {
    if (!first) os << ' ';
    first = false;
    os << names.at(s.letter);
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

Word reduce(int alphabet_size, const std::vector<Syllable>& raw) {
  return Word(alphabet_size, raw);
}

std::vector<std::string> default_alphabet(int n) {
  static const char* base[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(i < 4 ? base[i] : "x" + std::to_string(i + 1));
  return names;
}

Word parse_word(const std::string& text,
                const std::vector<std::string>& alphabet) {
  std::vector<Syllable> raw;
  std::istringstream is(text);
  std::string tok;
  std::vector<std::string> names = alphabet;
  while (is >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    long long exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        exp = std::stoll(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw ParseError("bad exponent in '" + tok + "'");
      }
    }
    int letter = -1;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) {
        letter = static_cast<int>(i);
        break;
      }
    if (letter < 0) throw ParseError("unknown letter '" + name + "'");
    raw.push_back(Syllable{letter, exp});
  }
  return Word(static_cast<int>(names.size()), std::move(raw));
}

Word commutator_generator(long long m, long long k) {
  // (x^m y^{k+1})^{-1} y x^m y^k over {x, y}
  Word x = Word::letter(2, 0), y = Word::letter(2, 1);
  Word head = (x.power(m) * y.power(k + 1)).inverse();
  return head * y * x.power(m) * y.power(k);
}

Mat2 mat2_identity() { return Mat2{1, 0, 0, 1}; }

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return Mat2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
              a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

namespace {

Mat2 mat2_pow(Mat2 base, long long k) {
  if (k < 0) {
    // det 1 inverse: [[d,-b],[-c,a]]
    base = Mat2{base[3], -base[1], -base[2], base[0]};
    k = -k;
  }
  Mat2 acc = mat2_identity();
  while (k) {
    if (k & 1) acc = mat2_mul(acc, base);
    base = mat2_mul(base, base);
    k >>= 1;
  }
  return acc;
}

}  // namespace

Mat2 sl2_ping_pong(long long n, const Word& w) {
  if (n < 2) throw Error("ping-pong requires n >= 2");
  if (w.alphabet_size() != 2) throw Error("word must be over two letters");
  const Mat2 x{1, BigInt(n), 0, 1};
  const Mat2 y{1, 0, BigInt(n), 1};
  Mat2 acc = mat2_identity();
  for (const Syllable& s : w.syllables())
    acc = mat2_mul(acc, mat2_pow(s.letter == 0 ? x : y, s.exp));
  return acc;
}

}  // namespace cgt
