#include "tpg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tpg::perm {

Perm::Perm(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) throw std::invalid_argument("permutation degree too large");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) throw std::invalid_argument("permutation degree too large");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("images do not form a bijection");
    seen[x] = true;
  }
}

namespace {

std::vector<std::vector<std::size_t>> parse_cycles(std::string_view s) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + std::string(s));
    ++i;
    std::vector<std::size_t> cyc;
    skip_ws();
    while (i < s.size() && s[i] != ')') {
      skip_ws();
      std::size_t v = 0;
      bool any = false;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::size_t>(s[i] - '0');
        ++i;
        any = true;
      }
      if (!any || v == 0) throw std::invalid_argument("bad point in cycle notation: " + std::string(s));
      cyc.push_back(v - 1);
      skip_ws();
      if (i < s.size() && s[i] == ',') ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("unterminated cycle: " + std::string(s));
    ++i;
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Perm Perm::parse(std::string_view text, std::size_t degree) {
  const auto cycles = parse_cycles(text);
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const std::size_t x = cyc[k];
      if (x >= degree) throw std::invalid_argument("point exceeds degree: " + std::string(text));
      if (used[x]) throw std::invalid_argument("cycles are not disjoint: " + std::string(text));
      used[x] = true;
      img[x] = static_cast<Point>(cyc[(k + 1) % cyc.size()]);
    }
  }
  return Perm(std::move(img));
}

Perm Perm::parse(std::string_view text) {
  std::size_t n = 0;
  for (const auto& cyc : parse_cycles(text))
    for (auto x : cyc) n = std::max(n, x + 1);
  return parse(text, n);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Perm acc(degree());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::size_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::conj(const Perm& g) const {
  // x^g maps g(i) -> g(x(i)).
  if (g.degree() != degree()) throw std::invalid_argument("degree mismatch in conjugation");
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

Perm Perm::extended(std::size_t degree) const {
  if (degree < images_.size()) throw std::invalid_argument("cannot shrink a permutation");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::copy(images_.begin(), images_.end(), img.begin());
  return Perm(std::move(img));
}

std::string Perm::str() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in composition");
  Perm r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i) r.images_[i] = q.images_[p.images_[i]];
  return r;
}

std::size_t element_order(const Perm& g) { return g.order(); }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image array.
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace tpg::perm
