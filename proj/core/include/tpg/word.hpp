#pragma once

// Words in three involutory generators a, b, c and the G^(m,n,p) family of
// presentations built from them.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tpg/perm.hpp"
#include "tpg/perm_group.hpp"

namespace tpg::fp {

enum class Gen : std::uint8_t { A = 0, B = 1, C = 2 };
inline constexpr std::size_t kNumGens = 3;

char to_char(Gen g);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A word in a, b, c. Generators are involutions, so the inverse of a word is
/// its reversal and x^y = y^-1 x y is rev(y) x y.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Gen> letters) : letters_(std::move(letters)) {}

  /// Parses expressions such as "a*b^c", "ab.b^c", "(ac)^3",
  /// "c^{acabcacac}", "((ac)^3)^b". Juxtaposition, '*' and '.' all mean the
  /// product; '^' takes an integer power or a conjugating word (a single
  /// letter, or a braced/parenthesized expression) and binds tightest.
  static Word parse(std::string_view expr);

  const std::vector<Gen>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(long e) const;
  /// this^y = y^-1 * this * y.
  Word conj(const Word& y) const;
  /// Cancels adjacent equal letters (g^2 = 1 holds in every presentation here).
  Word reduced() const;

  /// Plain letter string, e.g. "acbc"; the empty word prints "1".
  std::string str() const;

  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Gen> letters_;
};

/// Substitutes permutations for a, b, c and multiplies left to right.
perm::Perm evaluate_word(const Word& w, const std::array<perm::Perm, kNumGens>& images);

/// A relator base^exponent, keeping the source expression for printing.
struct Relator {
  std::string text;  // expression of the base, e.g. "a*b^c"
  Word base;
  long exponent = 1;

  Word word() const { return base.pow(exponent); }
  /// "(a*b^c)^4" style text.
  std::string str() const;
};

class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<Relator> relators) : relators_(std::move(relators)) {}

  /// Text grammar: statements separated by ';', '#' starts a comment.
  ///   gens a b c;
  ///   rel (a)^2;
  ///   rel (a*b^c)^4;
  static Presentation parse(std::string_view text);
  std::string str() const;

  const std::vector<Relator>& relators() const { return relators_; }
  void add(Relator r) { relators_.push_back(std::move(r)); }
  /// Adds expr^exponent (expression parsed with Word::parse).
  void add(std::string_view expr, long exponent);

 private:
  std::vector<Relator> relators_;
};

/// The five extra relator bases R1..R5 (index 0..4):
///   R1 = a*b^c, R2 = ab*b^c, R3 = ab*a^c, R4 = c*b^{ca}, R5 = c^a*c^{bc}.
const std::array<std::string_view, 5>& extra_relator_texts();

using ExtraExponents = std::array<std::optional<int>, 5>;

/// <a,b,c | a^2, b^2, c^2, (ab)^2, (ac)^m, (bc)^n, (abc)^p, R_i^{r_i}...>.
/// Throws std::invalid_argument for parameters outside 1..6.
Presentation tp_presentation(int m, int n, int p, const ExtraExponents& r = {});

/// True iff every relator is the identity under images and the images
/// generate exactly h.
bool verify_presentation(const Presentation& pres, const std::array<perm::Perm, kNumGens>& images,
                         const perm::PermGroup& h);

}  // namespace tpg::fp
