#include "tpg/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <string>

namespace tpg::perm {

namespace {

/// Open-addressing index over a vector of permutations, so that each element
/// is stored exactly once.
class PermIndex {
 public:
  void rebuild(const std::vector<Perm>& elems) {
    std::size_t cap = 16;
    while (cap < 2 * elems.size() + 2) cap <<= 1;
    slots_.assign(cap, kEmpty);
    for (std::size_t i = 0; i < elems.size(); ++i) insert(elems, i);
  }

  std::optional<std::size_t> find(const std::vector<Perm>& elems, const Perm& p) const {
    if (slots_.empty()) return std::nullopt;
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t h = PermHash{}(p) & mask;; h = (h + 1) & mask) {
      const std::uint32_t s = slots_[h];
      if (s == kEmpty) return std::nullopt;
      if (elems[s] == p) return s;
    }
  }

  /// Registers elems[i]; grows the table when half full.
  void insert(const std::vector<Perm>& elems, std::size_t i) {
    if (slots_.empty() || 2 * (i + 1) > slots_.size()) {
      std::size_t cap = slots_.empty() ? 16 : slots_.size() * 2;
      slots_.assign(cap, kEmpty);
      for (std::size_t j = 0; j < i; ++j) place(elems, j);
    }
    place(elems, i);
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  void place(const std::vector<Perm>& elems, std::size_t i) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t h = PermHash{}(elems[i]) & mask;
    while (slots_[h] != kEmpty) h = (h + 1) & mask;
    slots_[h] = static_cast<std::uint32_t>(i);
  }

  std::vector<std::uint32_t> slots_;
};

std::vector<Perm> closure(std::size_t degree, const std::vector<Perm>& gens, std::size_t ceiling) {
  std::vector<Perm> elems{Perm::identity(degree)};
  PermIndex idx;
  idx.insert(elems, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Perm y = elems[head] * g;
      if (idx.find(elems, y)) continue;
      if (elems.size() >= ceiling)
        throw CapacityError("group order exceeds the ceiling of " + std::to_string(ceiling));
      elems.push_back(std::move(y));
      idx.insert(elems, elems.size() - 1);
    }
  }
  return elems;
}

}  // namespace

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::size_t ceiling = kDefaultOrderCeiling;

  std::once_flag elems_once;
  std::vector<Perm> elems;
  PermIndex index;

  std::once_flag inv_once;
  std::vector<std::size_t> inverses;

  std::once_flag orders_once;
  std::vector<std::size_t> orders;

  std::once_flag classes_once;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;

  void ensure_elements() {
    std::call_once(elems_once, [this] {
      if (elems.empty()) elems = closure(degree, gens, ceiling);
      std::sort(elems.begin(), elems.end());
      index.rebuild(elems);
    });
  }
};

PermGroup::PermGroup() : impl_(std::make_shared<Impl>()) {}

PermGroup PermGroup::deferred(std::size_t degree, std::vector<Perm> gens, std::size_t ceiling) {
  if (degree > kMaxDegree) throw std::invalid_argument("permutation degree too large");
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->ceiling = ceiling;
  for (auto& g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator " + g.str() + " has degree " + std::to_string(g.degree()) +
                                  ", expected " + std::to_string(degree));
  }
  impl->gens = std::move(gens);
  return PermGroup(std::move(impl));
}

PermGroup PermGroup::generate(std::size_t degree, std::vector<Perm> gens, std::size_t ceiling) {
  PermGroup g = deferred(degree, std::move(gens), ceiling);
  g.impl_->ensure_elements();
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> gens, std::vector<Perm> elements) {
  PermGroup g = deferred(degree, std::move(gens), std::max(kDefaultOrderCeiling, elements.size()));
  g.impl_->elems = std::move(elements);
  g.impl_->ensure_elements();
  return g;
}

PermGroup generate(std::size_t degree, std::vector<Perm> gens, std::size_t ceiling) {
  return PermGroup::generate(degree, std::move(gens), ceiling);
}

std::size_t PermGroup::degree() const { return impl_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return impl_->gens; }
std::size_t PermGroup::ceiling() const { return impl_->ceiling; }

const std::vector<Perm>& PermGroup::elements() const {
  impl_->ensure_elements();
  return impl_->elems;
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  impl_->ensure_elements();
  if (p.degree() != impl_->degree) return std::nullopt;
  return impl_->index.find(impl_->elems, p);
}

std::size_t PermGroup::index(const Perm& p) const {
  auto i = index_of(p);
  if (!i) throw std::out_of_range("permutation " + p.str() + " is not in the group");
  return *i;
}

std::size_t PermGroup::mul(std::size_t i, std::size_t j) const {
  const auto& e = elements();
  return index(e[i] * e[j]);
}

std::size_t PermGroup::inv(std::size_t i) const {
  std::call_once(impl_->inv_once, [this] {
    const auto& e = elements();
    impl_->inverses.resize(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) impl_->inverses[k] = index(e[k].inverse());
  });
  return impl_->inverses[i];
}

std::size_t PermGroup::conj(std::size_t i, std::size_t j) const {
  const auto& e = elements();
  return index(e[i].conj(e[j]));
}

const std::vector<std::size_t>& PermGroup::element_orders() const {
  std::call_once(impl_->orders_once, [this] {
    const auto& e = elements();
    impl_->orders.resize(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) impl_->orders[k] = e[k].order();
  });
  return impl_->orders;
}

const std::vector<std::vector<std::size_t>>& PermGroup::classes() const {
  std::call_once(impl_->classes_once, [this] {
    const auto& e = elements();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    impl_->class_of.assign(e.size(), kUnset);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (impl_->class_of[i] != kUnset) continue;
      const std::size_t c = impl_->classes.size();
      std::vector<std::size_t> orbit{i};
      impl_->class_of[i] = c;
      for (std::size_t h = 0; h < orbit.size(); ++h) {
        for (const auto& g : impl_->gens) {
          const std::size_t y = index(e[orbit[h]].conj(g));
          if (impl_->class_of[y] == kUnset) {
            impl_->class_of[y] = c;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      impl_->classes.push_back(std::move(orbit));
    }
  });
  return impl_->classes;
}

const std::vector<std::size_t>& PermGroup::class_index() const {
  classes();
  return impl_->class_of;
}

bool PermGroup::is_abelian() const {
  const auto& gs = generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!commute(gs[i], gs[j])) return false;
  return true;
}

std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g) {
  std::vector<std::vector<Perm>> out;
  for (const auto& cls : g.classes()) {
    std::vector<Perm> ps;
    ps.reserve(cls.size());
    for (auto i : cls) ps.push_back(g.element(i));
    out.push_back(std::move(ps));
  }
  return out;
}

PermGroup subgroup(const PermGroup& g, std::vector<Perm> gens) {
  for (const auto& x : gens)
    if (!g.contains(x)) throw std::invalid_argument("subgroup generator " + x.str() + " is not in the group");
  PermGroup h = PermGroup::generate(g.degree(), std::move(gens), g.ceiling());
  if (g.order() % h.order() != 0) throw std::logic_error("Lagrange violated in subgroup construction");
  return h;
}

bool is_subgroup_of(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree() || g.order() % h.order() != 0) return false;
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const Perm& x) { return g.contains(x); });
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  if (!is_subgroup_of(n, g)) return false;
  for (const auto& x : n.generators())
    for (const auto& s : g.generators())
      if (!n.contains(x.conj(s))) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& g, std::span<const Perm> xs) {
  std::vector<Perm> gens;
  for (const auto& x : xs) {
    if (!g.contains(x)) throw std::invalid_argument("normal closure seed " + x.str() + " is not in the group");
    if (!x.is_identity()) gens.push_back(x);
  }
  PermGroup n = PermGroup::generate(g.degree(), gens, g.ceiling());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (const auto& s : g.generators()) {
      Perm y = gens[k].conj(s);
      if (n.contains(y)) continue;
      gens.push_back(std::move(y));
      n = PermGroup::generate(g.degree(), gens, g.ceiling());
    }
  }
  return n;
}

Quotient quotient(const PermGroup& g, const PermGroup& n, std::span<const Perm> tracked) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient by a subgroup that is not normal");
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  const auto& e = g.elements();
  Quotient q;
  q.coset_of.assign(e.size(), kUnset);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (q.coset_of[i] != kUnset) continue;
    const std::size_t c = reps.size();
    reps.push_back(i);
    for (const auto& m : n.elements()) q.coset_of[g.index(m * e[i])] = c;
  }
  const std::size_t index = reps.size();
  if (index > kMaxDegree) throw CapacityError("quotient index exceeds the maximal permutation degree");
  auto action = [&](const Perm& t) {
    std::vector<Point> img(index);
    for (std::size_t c = 0; c < index; ++c) img[c] = static_cast<Point>(q.coset_of[g.index(e[reps[c]] * t)]);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (const auto& s : g.generators()) gens.push_back(action(s));
  for (const auto& t : tracked) q.tracked.push_back(action(t));
  q.group = PermGroup::deferred(index, std::move(gens), g.ceiling());
  return q;
}

bool is_elementary_abelian_2(const PermGroup& k) {
  const auto& ords = k.element_orders();
  return std::all_of(ords.begin(), ords.end(), [](std::size_t o) { return o <= 2; });
}

PermGroup center(const PermGroup& g) {
  std::vector<Perm> z;
  for (const auto& x : g.elements()) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](const Perm& s) { return commute(x, s); });
    if (central) z.push_back(x);
  }
  std::vector<Perm> gens;
  for (const auto& x : z)
    if (!x.is_identity()) gens.push_back(x);
  return PermGroup::from_elements(g.degree(), std::move(gens), std::move(z));
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) comms.push_back(gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j]);
  if (g.degree() == 0) return g;
  return normal_closure(g, comms);
}

namespace {

std::vector<std::pair<std::size_t, int>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, int>> f;
  for (std::size_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

/// Elementary divisors of an abelian group from its element-order histogram.
std::vector<std::size_t> abelian_invariants_from_orders(const std::vector<std::size_t>& orders) {
  std::vector<std::size_t> out;
  for (auto [p, e] : factorize(orders.size())) {
    // count[k] = #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i)).
    std::vector<int> logc;
    std::size_t pk = 1;
    for (int k = 0;; ++k) {
      std::size_t cnt = 0;
      for (auto o : orders)
        if (pk % o == 0) ++cnt;
      int l = 0;
      for (std::size_t c = cnt; c > 1; c /= p) ++l;
      logc.push_back(l);
      if (l == e) break;
      pk *= p;
    }
    // ge[k] = #{i : e_i >= k} = logc[k] - logc[k-1].
    std::vector<int> ge;
    for (std::size_t k = 1; k < logc.size(); ++k) ge.push_back(logc[k] - logc[k - 1]);
    for (std::size_t k = 0; k < ge.size(); ++k) {
      const int next = k + 1 < ge.size() ? ge[k + 1] : 0;
      const int exactly = ge[k] - next;
      std::size_t q = 1;
      for (std::size_t t = 0; t <= k; ++t) q *= p;
      for (int r = 0; r < exactly; ++r) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IsoFingerprint fingerprint(const PermGroup& g) {
  IsoFingerprint f;
  f.order = g.order();
  for (auto o : g.element_orders()) ++f.order_histogram[o];
  f.class_count = g.classes().size();
  for (const auto& cls : g.classes()) ++f.class_shape[{g.order_of(cls.front()), cls.size()}];
  f.center_order = center(g).order();
  const PermGroup d = derived_subgroup(g);
  f.derived_order = d.order();
  // Orders in G/G' of coset representatives.
  std::vector<std::size_t> qorders;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    for (const auto& m : d.elements()) seen[g.index(m * g.element(i))] = 1;
    std::size_t k = 1;
    Perm x = g.element(i);
    while (!d.contains(x)) {
      x = x * g.element(i);
      ++k;
    }
    qorders.push_back(k);
  }
  f.abelian_invariants = abelian_invariants_from_orders(qorders);
  return f;
}

ConjugationAction::ConjugationAction(std::span<const Perm> gens, std::span<const Perm> seeds) {
  std::unordered_map<Perm, std::size_t, PermHash> seen;
  std::vector<Perm> pts;
  for (const auto& s : seeds) {
    if (seen.emplace(s, pts.size()).second) pts.push_back(s);
  }
  for (std::size_t h = 0; h < pts.size(); ++h) {
    for (const auto& g : gens) {
      Perm y = pts[h].conj(g);
      if (seen.emplace(y, pts.size()).second) pts.push_back(std::move(y));
    }
  }
  std::sort(pts.begin(), pts.end());
  points_ = std::move(pts);
  for (std::size_t i = 0; i < points_.size(); ++i) where_[points_[i]] = i;
}

Perm ConjugationAction::image(const Perm& g) const {
  std::vector<Point> img(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto it = where_.find(points_[i].conj(g));
    if (it == where_.end()) throw std::invalid_argument("element does not normalize the conjugation orbit");
    img[i] = static_cast<Point>(it->second);
  }
  return Perm(std::move(img));
}

}  // namespace tpg::perm
