#include "tpg/axial.hpp"

#include <algorithm>
#include <set>

namespace tpg::axial {

using dihedral::Type;

namespace {

std::size_t cube(const PermGroup& g, std::size_t x) { return g.mul(g.mul(x, x), x); }

}  // namespace

bool TConfig::contains(const Perm& p) const {
  const auto i = group_.index_of(p);
  return i && contains(*i);
}

std::size_t TConfig::position(std::size_t element) const {
  if (element >= position_.size() || position_[element] == kAbsent)
    throw std::out_of_range("element " + std::to_string(element) + " is not in T");
  return position_[element];
}

fp::Word TConfig::word(std::size_t pos) const {
  const Provenance& p = provenance_.at(pos);
  switch (p.rule) {
    case Provenance::Rule::Seed:
      return fp::Word::parse(p.seed);
    case Provenance::Rule::Conjugate:
      return word(p.first).conj(fp::Word({p.letter})).reduced();
    case Provenance::Rule::Cube:
      return (word(p.first) * word(p.second)).pow(3).reduced();
  }
  return {};
}

TConfig t_closure(const PermGroup& g, const Perm& a, const Perm& b, const Perm& c) {
  TConfig cfg;
  cfg.group_ = g;
  cfg.seeds_ = {a, b, c};
  const Perm ab = a * b;
  const std::array<std::pair<const char*, const Perm*>, 4> seeds{{{"a", &a}, {"b", &b}, {"c", &c}, {"ab", &ab}}};
  std::array<std::size_t, 3> letters{};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto idx = g.index_of(*seeds[i].second);
    if (!idx) throw std::invalid_argument(std::string("seed ") + seeds[i].first + " is not in the group");
    if (g.order_of(*idx) != 2) throw std::invalid_argument(std::string("seed ") + seeds[i].first + " is not an involution");
    if (i < 3) letters[i] = *idx;
  }
  cfg.position_.assign(g.order(), TConfig::kAbsent);

  auto add = [&](std::size_t e, Provenance p) {
    cfg.position_[e] = cfg.tset_.size();
    cfg.tset_.push_back(e);
    cfg.provenance_.push_back(std::move(p));
  };
  std::size_t closed = 0;
  auto close_conjugation = [&] {
    for (; closed < cfg.tset_.size(); ++closed)
      for (std::size_t l = 0; l < 3; ++l) {
        const std::size_t e = g.conj(cfg.tset_[closed], letters[l]);
        if (cfg.contains(e)) continue;
        Provenance p;
        p.rule = Provenance::Rule::Conjugate;
        p.first = closed;
        p.letter = static_cast<fp::Gen>(l);
        add(e, p);
      }
  };
  for (const auto& [label, perm] : seeds) {
    const std::size_t e = g.index(*perm);
    if (cfg.contains(e)) continue;
    Provenance p;
    p.seed = label;
    cfg.reps_.push_back(e);
    add(e, p);
    close_conjugation();
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < cfg.reps_.size(); ++r)
      for (std::size_t s = 0; s < cfg.tset_.size(); ++s) {
        const std::size_t t = cfg.reps_[r];
        const std::size_t x = g.mul(t, cfg.tset_[s]);
        const std::size_t o = g.order_of(x);
        if (o > 6)
          throw NotTrianglePointError("T contains " + g.element(t).str() + " and " + g.element(cfg.tset_[s]).str() +
                                      " whose product has order " + std::to_string(o));
        if (o != 6) continue;
        const std::size_t e = cube(g, x);
        if (cfg.contains(e)) continue;
        Provenance p;
        p.rule = Provenance::Rule::Cube;
        p.first = cfg.position(t);
        p.second = s;
        cfg.reps_.push_back(e);
        add(e, p);
        close_conjugation();
        changed = true;
      }
  }
  return cfg;
}

std::string PairType::str() const {
  if (ambiguous) return "3A/3C";
  return std::string(dihedral::name(type));
}

PairType pair_type(const TConfig& cfg, std::size_t t, std::size_t s) {
  if (!cfg.contains(t) || !cfg.contains(s)) throw std::invalid_argument("pair_type needs two members of T");
  const PermGroup& g = cfg.group();
  const std::size_t x = g.mul(t, s);
  switch (g.order_of(x)) {
    case 1:
      return {Type::T1A};
    case 2:
      return {cfg.contains(x) ? Type::T2A : Type::T2B};
    case 3:
      for (const std::size_t r : cfg.elements())
        if (g.order_of(g.mul(t, r)) == 6 && g.conj(t, r) == s) return {Type::T3A};
      return {Type::T3A, true};
    case 4:
      return {cfg.contains(g.mul(x, x)) ? Type::T4B : Type::T4A};
    case 5:
      return {Type::T5A};
    case 6:
      return {Type::T6A};
    default:
      throw NotTrianglePointError("product of " + g.element(t).str() + " and " + g.element(s).str() +
                                  " has order " + std::to_string(g.order_of(x)));
  }
}

namespace {

/// Completes x, y with every admissible z, in increasing element order.
/// in_s tests membership of the set playing the role of T.
template <class InS, class Emit>
void klein_extend(const PermGroup& g, std::size_t x, std::size_t y, const std::vector<std::size_t>& candidates,
                  const InS& in_s, const Emit& emit) {
  const std::size_t xy = g.mul(x, y);
  for (const std::size_t z : candidates) {
    if (z == x || z == y || z == xy) continue;
    if (g.mul(x, z) != g.mul(z, x) || g.mul(y, z) != g.mul(z, y)) continue;
    const std::size_t xz = g.mul(x, z), yz = g.mul(y, z), xyz = g.mul(xy, z);
    if (!in_s(xz) || !in_s(yz) || !in_s(xyz)) continue;
    KleinWitness w{{x, y, z}, {x, y, z, xy, xz, yz, xyz}};
    std::sort(w.involutions.begin(), w.involutions.end());
    if (!emit(w)) return;
  }
}

/// Runs the search with x drawn from xs and y, z from candidates (ascending).
/// emit returns false to stop.
template <class InS, class Emit>
void klein_scan(const PermGroup& g, const std::vector<std::size_t>& xs, const std::vector<std::size_t>& candidates,
                const InS& in_s, const Emit& emit) {
  bool go = true;
  auto wrapped = [&](const KleinWitness& w) { return go = emit(w); };
  for (const std::size_t x : xs) {
    if (g.order_of(x) != 2) continue;
    std::vector<std::size_t> cent;
    for (const std::size_t y : candidates)
      if (y != x && g.mul(x, y) == g.mul(y, x) && in_s(g.mul(x, y))) cent.push_back(y);
    for (const std::size_t y : cent) {
      klein_extend(g, x, y, cent, in_s, wrapped);
      if (!go) return;
    }
  }
}

std::vector<std::size_t> sorted_copy(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::optional<KleinWitness> klein_search(const TConfig& cfg) {
  std::optional<KleinWitness> out;
  klein_scan(cfg.group(), cfg.class_representatives(), sorted_copy(cfg.elements()),
             [&](std::size_t e) { return cfg.contains(e); },
             [&](const KleinWitness& w) {
               out = w;
               return false;
             });
  return out;
}

std::vector<KleinWitness> klein_search_all(const TConfig& cfg) {
  const PermGroup& g = cfg.group();
  std::set<std::array<std::size_t, 7>> seen;
  std::vector<KleinWitness> found;
  auto record = [&](const KleinWitness& w) {
    if (seen.insert(w.involutions).second) found.push_back(w);
    return true;
  };
  klein_scan(g, cfg.class_representatives(), sorted_copy(cfg.elements()),
             [&](std::size_t e) { return cfg.contains(e); }, record);
  std::vector<std::size_t> gens;
  for (const auto& s : cfg.seeds()) gens.push_back(g.index(s));
  for (std::size_t h = 0; h < found.size(); ++h)
    for (const std::size_t l : gens) {
      KleinWitness w = found[h];
      for (auto& x : w.generators) x = g.conj(x, l);
      for (auto& x : w.involutions) x = g.conj(x, l);
      std::sort(w.involutions.begin(), w.involutions.end());
      record(w);
    }
  std::sort(found.begin(), found.end(),
            [](const KleinWitness& x, const KleinWitness& y) { return x.involutions < y.involutions; });
  return found;
}

std::optional<KleinWitness> klein_search_in(const PermGroup& g, const PermGroup& k,
                                            const std::vector<std::size_t>& s) {
  std::vector<std::size_t> in_k;
  for (const std::size_t e : s)
    if (k.contains(g.element(e))) in_k.push_back(e);
  std::sort(in_k.begin(), in_k.end());
  std::optional<KleinWitness> out;
  klein_scan(g, in_k, in_k, [&](std::size_t e) { return std::binary_search(in_k.begin(), in_k.end(), e); },
             [&](const KleinWitness& w) {
               out = w;
               return false;
             });
  return out;
}

KleinIdentityReport klein_identity() {
  // Axes indexed by the nonzero vectors of F_2^3: t0 = 1, t1 = 2, t2 = 4 and
  // the product of involutions is XOR.
  using qlin::Vector;
  auto e = [](unsigned i) { return Vector::unit(8, i); };
  auto mul = [&](const Vector& u, const Vector& v) {
    Vector w(8);
    for (unsigned i = 1; i < 8; ++i)
      for (unsigned j = 1; j < 8; ++j) {
        const Rational c = u[i] * v[j];
        if (c == 0) continue;
        if (i == j)
          w += c * e(i);
        else
          w += (c * qlin::ratio(1, 8)) * (e(i) + e(j) - e(i ^ j));
      }
    return w;
  };
  const Vector d1 = e(2) - e(3), d2 = e(4) - e(5), d12 = e(6) - e(7);
  KleinIdentityReport r;
  const Vector prod = mul(d1, d2);
  r.coefficient = prod[6];
  r.product_is_multiple = prod == r.coefficient * d12;
  const Rational quarter = qlin::ratio(1, 4);
  const std::array<Vector, 3> diffs{d1, d2, d12};
  for (std::size_t i = 0; i < 3; ++i) r.quarter_eigenvectors[i] = mul(e(1), diffs[i]) == quarter * diffs[i];
  r.allowed = dihedral::fusion_rule(quarter, quarter);
  const bool quarter_allowed = std::find(r.allowed.begin(), r.allowed.end(), quarter) != r.allowed.end();
  r.contradiction = r.product_is_multiple && r.coefficient != 0 && r.quarter_eigenvectors[0] &&
                    r.quarter_eigenvectors[1] && r.quarter_eigenvectors[2] && !quarter_allowed;
  return r;
}

namespace {

struct AxisSpan {
  const PermGroup& g;
  std::vector<std::size_t> s;

  bool in_s(std::size_t e) const { return std::binary_search(s.begin(), s.end(), e); }

  PairType type(std::size_t i, std::size_t j) const {
    const std::size_t x = g.mul(i, j);
    switch (g.order_of(x)) {
      case 1:
        return {Type::T1A};
      case 2:
        return {in_s(x) ? Type::T2A : Type::T2B};
      case 4:
        return {in_s(g.mul(x, x)) ? Type::T4B : Type::T4A};
      default:
        throw UnsupportedConfigurationError("axis-span audit supports product orders 1, 2 and 4 only");
    }
  }

  Rational inner(std::size_t i, std::size_t j) const {
    switch (type(i, j).type) {
      case Type::T1A:
        return 1;
      case Type::T2A:
        return qlin::ratio(1, 8);
      case Type::T2B:
        return 0;
      case Type::T4A:
        return qlin::ratio(1, 32);
      default:
        return qlin::ratio(1, 64);
    }
  }

  /// a_i . a_j as a combination of axes, when it lies in the axis span.
  std::optional<std::vector<std::pair<std::size_t, Rational>>> product(std::size_t i, std::size_t j) const {
    using Terms = std::vector<std::pair<std::size_t, Rational>>;
    const Rational e = qlin::ratio(1, 8), sf = qlin::ratio(1, 64);
    switch (type(i, j).type) {
      case Type::T1A:
        return Terms{{i, 1}};
      case Type::T2A:
        return Terms{{i, e}, {j, e}, {g.mul(i, j), -e}};
      case Type::T2B:
        return Terms{};
      case Type::T4B: {
        const std::size_t rho = g.mul(i, j);
        return Terms{{i, sf}, {j, sf}, {g.conj(j, i), -sf}, {g.conj(i, j), -sf}, {g.mul(rho, rho), sf}};
      }
      default:
        return std::nullopt;
    }
  }

  Rational inner(const std::vector<std::pair<std::size_t, Rational>>& terms, std::size_t k) const {
    Rational r = 0;
    for (const auto& [m, c] : terms) r += c * inner(m, k);
    return r;
  }
};

int audit_priority(Type t) {
  switch (t) {
    case Type::T2A:
      return 0;
    case Type::T2B:
      return 1;
    case Type::T4B:
      return 2;
    default:
      return 3;
  }
}

}  // namespace

std::optional<M1Witness> m1_audit(const PermGroup& g, const PermGroup& k, const std::vector<std::size_t>& s) {
  for (std::size_t e = 0; e < k.order(); ++e) {
    const std::size_t o = k.order_of(e);
    if (o != 1 && o != 2 && o != 4)
      throw UnsupportedConfigurationError("axis-span audit needs element orders in {1, 2, 4}; found " +
                                          std::to_string(o));
  }
  AxisSpan span{g, s};
  std::sort(span.s.begin(), span.s.end());
  for (const std::size_t e : span.s) {
    if (!k.contains(g.element(e))) throw std::invalid_argument("audit set is not contained in the subgroup");
    if (g.order_of(e) != 2) throw std::invalid_argument("audit set contains a non-involution");
  }
  struct Pair {
    int priority;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (const std::size_t i : span.s)
    for (const std::size_t j : span.s)
      if (i != j) pairs.push_back({audit_priority(span.type(i, j).type), i, j});
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.priority < y.priority; });
  for (const auto& [priority, i, j] : pairs) {
    if (priority == 3) break;
    const auto ij = *span.product(i, j);
    for (const std::size_t kk : span.s) {
      const auto jk = span.product(j, kk);
      if (!jk) continue;
      Rational left = span.inner(ij, kk);
      Rational right = 0;
      for (const auto& [m, c] : *jk) right += c * span.inner(i, m);
      if (left != right) return M1Witness{i, j, kk, span.type(i, j), span.type(j, kk), left, right};
    }
  }
  return std::nullopt;
}

std::optional<M1Witness> m1_audit(const TConfig& cfg, const PermGroup& k) {
  std::vector<std::size_t> s;
  for (const auto& x : k.elements()) {
    const auto e = cfg.group().index(x);
    if (cfg.contains(e)) s.push_back(e);
  }
  return m1_audit(cfg.group(), k, s);
}

std::vector<PermGroup> find_subgroups_iso(const PermGroup& g, const PermGroup& ref) {
  const std::vector<Perm> rgens = irredundant_generators(ref);
  std::vector<std::size_t> want_order, prefix_order;
  for (std::size_t i = 0; i < rgens.size(); ++i) {
    want_order.push_back(rgens[i].order());
    std::vector<Perm> prefix(rgens.begin(), rgens.begin() + static_cast<std::ptrdiff_t>(i + 1));
    prefix_order.push_back(PermGroup::generate(ref.degree(), prefix).order());
  }

  struct Sub {
    std::vector<std::size_t> gens;
    std::vector<std::size_t> elems;  // ascending
  };
  // Closure of h's elements and x inside g, abandoned beyond `limit`.
  auto extend = [&](const Sub& h, std::size_t x, std::size_t limit) -> std::optional<Sub> {
    Sub out{h.gens, {}};
    out.gens.push_back(x);
    std::vector<std::size_t> queue{0};
    std::set<std::size_t> seen{0};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const std::size_t y : out.gens) {
        const std::size_t z = g.mul(queue[q], y);
        if (seen.insert(z).second) {
          if (seen.size() > limit) return std::nullopt;
          queue.push_back(z);
        }
      }
    out.elems.assign(seen.begin(), seen.end());
    return out;
  };

  std::vector<Sub> level{Sub{{}, {0}}};
  for (std::size_t lv = 0; lv < rgens.size(); ++lv) {
    std::map<std::vector<std::size_t>, Sub> next;
    for (const Sub& h : level)
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (g.order_of(x) != want_order[lv] || std::binary_search(h.elems.begin(), h.elems.end(), x)) continue;
        auto j = extend(h, x, prefix_order[lv]);
        if (!j || j->elems.size() != prefix_order[lv]) continue;
        next.emplace(j->elems, std::move(*j));
      }
    level.clear();
    for (auto& [key, sub] : next) level.push_back(std::move(sub));
  }

  std::vector<PermGroup> out;
  const auto fp_ref = fingerprint(ref);
  for (const Sub& h : level) {
    std::vector<Perm> gens, elems;
    for (const std::size_t x : h.gens) gens.push_back(g.element(x));
    for (const std::size_t x : h.elems) elems.push_back(g.element(x));
    PermGroup k = PermGroup::from_elements(g.degree(), std::move(gens), std::move(elems));
    if (fingerprint(k) == fp_ref && isomorphic(k, ref)) out.push_back(std::move(k));
  }
  return out;
}

}  // namespace tpg::axial
