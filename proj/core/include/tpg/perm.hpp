#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tpg::perm {

/// Points are stored 0-based; text form is 1-based disjoint-cycle notation.
using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

/// A permutation of {0, ..., n-1}.
///
/// Composition is left-to-right: (p * q) applies p first, then q, so
/// x^(p*q) = (x^p)^q. Conjugation is x^g = g^-1 * x * g.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  /// Parses "(1,2)(3,4)" or "()" on the given degree. Cycles may mention
  /// points up to the degree; throws std::invalid_argument on bad input.
  static Perm parse(std::string_view cycles, std::size_t degree);
  /// Parses with the degree set to the largest point mentioned.
  static Perm parse(std::string_view cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long e) const;
  /// Least m >= 1 with p^m = 1.
  std::size_t order() const;
  /// this^g = g^-1 * this * g.
  Perm conj(const Perm& g) const;

  /// Same permutation on a larger point set (extra points fixed).
  Perm extended(std::size_t degree) const;

  /// Disjoint-cycle text, e.g. "(1,2)(3,4)"; the identity prints "()".
  std::string str() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

std::size_t element_order(const Perm& g);

inline bool commute(const Perm& x, const Perm& y) { return x * y == y * x; }

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace tpg::perm
