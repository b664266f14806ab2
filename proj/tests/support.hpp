#pragma once

// Brute-force oracles shared by the unit tests and the acceptance binary.
// Nothing here calls into the algorithms it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tpg/dihedral.hpp"
#include "tpg/perm.hpp"
#include "tpg/qlin.hpp"

namespace tpg::oracle {

using perm::Perm;
using qlin::Rational;

inline Perm p(const char* cycles, std::size_t degree) { return Perm::parse(cycles, degree); }

/// Naive closure: multiply everything by everything until nothing new appears.
inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> s{Perm::identity(degree)};
  for (const auto& g : gens) s.insert(g);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Perm> cur(s.begin(), s.end());
    for (const auto& x : cur)
      for (const auto& y : cur)
        grew |= s.insert(x * y).second;
  }
  return s;
}

/// Order of a permutation as the lcm of its cycle lengths, read off the
/// image array directly.
inline std::size_t cycle_lcm(const Perm& x) {
  std::vector<bool> seen(x.degree());
  std::size_t l = 1;
  for (std::size_t i = 0; i < x.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = x(static_cast<perm::Point>(j))) {
      seen[j] = true;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

/// Conjugacy classes by direct conjugation over the whole element set.
inline std::vector<std::set<Perm>> classes(const std::set<Perm>& g) {
  std::vector<std::set<Perm>> out;
  std::set<Perm> done;
  for (const auto& x : g) {
    if (done.count(x)) continue;
    std::set<Perm> c;
    for (const auto& y : g) c.insert(y.inverse() * x * y);
    done.insert(c.begin(), c.end());
    out.push_back(c);
  }
  return out;
}

/// Normal subgroups as unions of classes that are closed under products.
/// Exponential in the class count, so only for small groups.
inline std::set<std::set<Perm>> normal_subgroups(const std::set<Perm>& g) {
  const auto cls = classes(g);
  std::set<std::set<Perm>> out;
  const std::size_t n = cls.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<Perm> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(cls[i].begin(), cls[i].end());
    if (s.empty() || !s.begin()->is_identity() || g.size() % s.size()) continue;
    bool closed = true;
    for (auto x = s.begin(); closed && x != s.end(); ++x)
      for (auto y = s.begin(); closed && y != s.end(); ++y) closed = s.count(*x * *y) > 0;
    if (closed) out.insert(s);
  }
  return out;
}

inline std::vector<Perm> involutions(const std::set<Perm>& g) {
  std::vector<Perm> out;
  for (const auto& x : g)
    if (cycle_lcm(x) == 2) out.push_back(x);
  return out;
}

/// Triangle-point test over every pair of X = a^G u b^G u c^G u (ab)^G.
inline bool triangle_point(const std::vector<Perm>& gens3, std::size_t degree) {
  const Perm &a = gens3[0], &b = gens3[1], &c = gens3[2];
  for (const auto& x : {a, b, c, a * b})
    if (cycle_lcm(x) != 2) return false;
  const auto g = closure(gens3, degree);
  std::set<Perm> xs;
  for (const auto& s : {a, b, c, a * b})
    for (const auto& y : g) xs.insert(y.inverse() * s * y);
  for (const auto& x : xs)
    for (const auto& y : xs)
      if (cycle_lcm(x * y) > 6) return false;
  return true;
}

/// Axis-span inner products for a set S of involutions with dihedral types
/// read off orders: 1A, 2A/2B by membership of the product, 4A/4B by
/// membership of the square of the product.
struct AxisForm {
  std::set<Perm> s;

  Rational inner(const Perm& x, const Perm& y) const {
    if (x == y) return 1;
    const Perm xy = x * y;
    switch (cycle_lcm(xy)) {
      case 2: return s.count(xy) ? Rational(1, 8) : Rational(0);
      case 4: return s.count(xy * xy) ? Rational(1, 64) : Rational(1, 32);
      default: throw std::logic_error("unsupported product order");
    }
  }

  /// Product of two axes as a formal combination, for 2A, 2B and 4B pairs.
  std::map<Perm, Rational> product(const Perm& x, const Perm& y) const {
    std::map<Perm, Rational> v;
    if (x == y) {
      v[x] = 1;
      return v;
    }
    const Perm xy = x * y;
    const std::size_t o = cycle_lcm(xy);
    if (o == 2 && s.count(xy)) {
      v[x] += Rational(1, 8);
      v[y] += Rational(1, 8);
      v[xy] -= Rational(1, 8);
    } else if (o == 2) {
      // 2B: the product is zero.
    } else if (o == 4 && s.count(xy * xy)) {
      const Perm xm = y * x * y, y2 = x * y * x;
      v[x] += Rational(1, 64);
      v[y] += Rational(1, 64);
      v[xm] -= Rational(1, 64);
      v[y2] -= Rational(1, 64);
      v[xy * xy] += Rational(1, 64);
    } else {
      throw std::logic_error("product not in the axis span");
    }
    return v;
  }

  Rational inner(const std::map<Perm, Rational>& v, const Perm& z) const {
    Rational r = 0;
    for (const auto& [x, c] : v) r += c * inner(x, z);
    return r;
  }
};

/// Random vector with small rational entries.
inline qlin::Vector random_vector(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  qlin::Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = qlin::ratio(num(rng), den(rng));
  return v;
}

/// (u.u, v.v) >= (u.v, u.v) on `samples` random pairs; returns the number of
/// failures.
inline std::size_t norton_failures(const dihedral::DihedralAlgebra& alg, std::mt19937& rng, std::size_t samples) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto u = random_vector(rng, alg.dim()), v = random_vector(rng, alg.dim());
    const auto uv = alg.product(u, v);
    if (alg.inner(alg.product(u, u), alg.product(v, v)) < alg.inner(uv, uv)) ++bad;
  }
  return bad;
}

/// Sylvester-style PSD test: every principal minor is nonnegative, with the
/// determinants from cofactor expansion. Exponential, so only for n <= 10.
inline Rational det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    d += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return d;
}

inline bool psd_by_minors(const qlin::Matrix& g) {
  const std::size_t n = g.rows();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    std::vector<std::vector<Rational>> m(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m[i][j] = g(idx[i], idx[j]);
    if (det(m) < 0) return false;
  }
  return true;
}

}  // namespace tpg::oracle
