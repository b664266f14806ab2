#include "tpg/word.hpp"

#include <algorithm>
#include <cctype>

namespace tpg::fp {

char to_char(Gen g) { return static_cast<char>('a' + static_cast<int>(g)); }

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Word parse_all() {
    Word w = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_product_sep() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    if (s_[pos_] == '*' || s_[pos_] == '.') {
      ++pos_;
      return true;
    }
    // UTF-8 middle dot.
    if (s_.substr(pos_, 2) == "\xC2\xB7") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char ch = s_[pos_];
    return ch == 'a' || ch == 'b' || ch == 'c' || ch == '(' || ch == '1';
  }

  Word expr() {
    Word w = term();
    for (;;) {
      if (at_product_sep()) {
        w = w * term();
      } else if (starts_primary()) {
        w = w * term();
      } else {
        return w;
      }
    }
  }

  Word term() {
    Word w = primary();
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '^') return w;
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size()) fail("missing exponent");
      const char ch = s_[pos_];
      if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
        bool neg = ch == '-';
        if (neg) ++pos_;
        long e = 0;
        bool any = false;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          e = e * 10 + (s_[pos_] - '0');
          ++pos_;
          any = true;
        }
        if (!any) fail("bad integer exponent");
        w = w.pow(neg ? -e : e);
      } else if (ch == '{') {
        ++pos_;
        Word y = expr();
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
        ++pos_;
        w = w.conj(y);
      } else if (ch == '(') {
        ++pos_;
        Word y = expr();
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
        ++pos_;
        w = w.conj(y);
      } else if (ch == 'a' || ch == 'b' || ch == 'c') {
        ++pos_;
        w = w.conj(Word({static_cast<Gen>(ch - 'a')}));
      } else {
        fail("bad exponent");
      }
    }
  }

  Word primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char ch = s_[pos_];
    if (ch == 'a' || ch == 'b' || ch == 'c') {
      ++pos_;
      return Word({static_cast<Gen>(ch - 'a')});
    }
    if (ch == '1') {
      ++pos_;
      return Word{};
    }
    if (ch == '(') {
      ++pos_;
      Word w = expr();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    fail("expected a generator or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Word::parse(std::string_view expr) { return ExprParser(expr).parse_all(); }

Word Word::inverse() const {
  std::vector<Gen> r(letters_.rbegin(), letters_.rend());
  return Word(std::move(r));
}

Word Word::pow(long e) const {
  const Word base = e < 0 ? inverse() : *this;
  const long k = e < 0 ? -e : e;
  std::vector<Gen> out;
  out.reserve(base.length() * static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(out));
}

Word Word::conj(const Word& y) const { return y.inverse() * *this * y; }

Word Word::reduced() const {
  std::vector<Gen> out;
  for (Gen g : letters_) {
    if (!out.empty() && out.back() == g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (Gen g : letters_) s += to_char(g);
  return s;
}

Word operator*(const Word& x, const Word& y) {
  std::vector<Gen> out = x.letters_;
  out.insert(out.end(), y.letters_.begin(), y.letters_.end());
  return Word(std::move(out));
}

perm::Perm evaluate_word(const Word& w, const std::array<perm::Perm, kNumGens>& images) {
  const std::size_t n = images[0].degree();
  for (const auto& p : images)
    if (p.degree() != n) throw std::invalid_argument("generator images have different degrees");
  perm::Perm acc = perm::Perm::identity(n);
  for (Gen g : w.letters()) acc = acc * images[static_cast<std::size_t>(g)];
  return acc;
}

std::string Relator::str() const {
  if (exponent == 1) return text;
  return "(" + text + ")^" + std::to_string(exponent);
}

void Presentation::add(std::string_view expr, long exponent) {
  relators_.push_back(Relator{std::string(expr), Word::parse(expr), exponent});
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// Splits "(X)^k" into X and k when the outer parentheses enclose everything.
Relator relator_from_text(const std::string& text) {
  if (!text.empty() && text.front() == '(') {
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close != std::string::npos && close + 1 < text.size() && text[close + 1] == '^') {
      const std::string rest = trim(text.substr(close + 2));
      if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        const std::string inner = trim(text.substr(1, close - 1));
        return Relator{inner, Word::parse(inner), std::stol(rest)};
      }
    }
  }
  return Relator{text, Word::parse(text), 1};
}

}  // namespace

Presentation Presentation::parse(std::string_view text) {
  std::string cleaned;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      cleaned += '\n';
      continue;
    }
    cleaned += text[i];
  }
  Presentation p;
  bool saw_gens = false;
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    std::size_t end = cleaned.find(';', start);
    if (end == std::string::npos) end = cleaned.size();
    const std::string stmt = trim(std::string_view(cleaned).substr(start, end - start));
    start = end + 1;
    if (stmt.empty()) continue;
    if (stmt.rfind("gens", 0) == 0) {
      std::string names;
      for (char ch : stmt.substr(4))
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') names += ch;
      if (names != "abc") throw ParseError("only the generators a b c are supported: " + stmt);
      saw_gens = true;
    } else if (stmt.rfind("rel", 0) == 0) {
      p.add(relator_from_text(trim(stmt.substr(3))));
    } else {
      throw ParseError("unknown statement: " + stmt);
    }
  }
  if (!saw_gens) throw ParseError("presentation lacks a 'gens a b c;' statement");
  return p;
}

std::string Presentation::str() const {
  std::string s = "gens a b c;\n";
  for (const auto& r : relators_) s += "rel " + r.str() + ";\n";
  return s;
}

const std::array<std::string_view, 5>& extra_relator_texts() {
  static const std::array<std::string_view, 5> texts{"a*b^c", "ab*b^c", "ab*a^c", "c*b^{ca}", "c^a*c^{bc}"};
  return texts;
}

Presentation tp_presentation(int m, int n, int p, const ExtraExponents& r) {
  for (int x : {m, n, p})
    if (x < 1 || x > 6) throw std::invalid_argument("triangle exponents must lie in 1..6");
  for (const auto& e : r)
    if (e && (*e < 1 || *e > 6)) throw std::invalid_argument("extra relator exponents must lie in 1..6");
  Presentation pres;
  pres.add("a", 2);
  pres.add("b", 2);
  pres.add("c", 2);
  pres.add("ab", 2);
  pres.add("ac", m);
  pres.add("bc", n);
  pres.add("abc", p);
  for (std::size_t i = 0; i < 5; ++i)
    if (r[i]) pres.add(extra_relator_texts()[i], *r[i]);
  return pres;
}

bool verify_presentation(const Presentation& pres, const std::array<perm::Perm, kNumGens>& images,
                         const perm::PermGroup& h) {
  for (const auto& p : images)
    if (p.degree() != h.degree()) return false;
  for (const auto& r : pres.relators())
    if (!evaluate_word(r.word(), images).is_identity()) return false;
  for (const auto& p : images)
    if (!h.contains(p)) return false;
  std::vector<perm::Perm> gens(images.begin(), images.end());
  return perm::PermGroup::generate(h.degree(), gens, h.ceiling()).order() == h.order();
}

}  // namespace tpg::fp
