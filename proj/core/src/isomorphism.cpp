#include <algorithm>

#include "tpg/perm_group.hpp"

namespace tpg::perm {

std::vector<Perm> irredundant_generators(const PermGroup& g) {
  std::vector<Perm> gens;
  for (const auto& x : g.generators())
    if (!x.is_identity() && std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
  for (std::size_t k = gens.size(); k-- > 0;) {
    std::vector<Perm> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    if (PermGroup::generate(g.degree(), rest, g.ceiling()).order() == g.order()) gens = std::move(rest);
  }
  return gens;
}

namespace {

/// Breadth-first Cayley graph of g with respect to a generating tuple.
struct CayleyGraph {
  std::vector<std::size_t> bfs;                 // element indices in discovery order
  std::vector<std::vector<std::size_t>> right;  // right[x][k] = index(x * gen_k)
};

CayleyGraph cayley(const PermGroup& g, const std::vector<Perm>& gens) {
  CayleyGraph c;
  c.right.assign(g.order(), std::vector<std::size_t>(gens.size()));
  std::vector<char> seen(g.order(), 0);
  c.bfs.push_back(0);
  seen[0] = 1;
  for (std::size_t h = 0; h < c.bfs.size(); ++h) {
    const std::size_t x = c.bfs[h];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t y = g.index(g.element(x) * gens[k]);
      c.right[x][k] = y;
      if (!seen[y]) {
        seen[y] = 1;
        c.bfs.push_back(y);
      }
    }
  }
  return c;
}

/// Extends gen_k -> images[k] along the Cayley graph and checks that the map
/// is a well-defined injective homomorphism.
bool extends_to_isomorphism(const PermGroup& h, const CayleyGraph& c, const std::vector<Perm>& images) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> phi(c.right.size(), kUnset);
  std::vector<char> used(h.order(), 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<std::size_t> img_idx;
  for (const auto& im : images) img_idx.push_back(h.index(im));
  for (const std::size_t x : c.bfs) {
    for (std::size_t k = 0; k < images.size(); ++k) {
      const std::size_t y = c.right[x][k];
      const std::size_t v = h.mul(phi[x], img_idx[k]);
      if (phi[y] == kUnset) {
        if (used[v]) return false;
        used[v] = 1;
        phi[y] = v;
      } else if (phi[y] != v) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<Isomorphism> find_isomorphism(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() == 1) return Isomorphism{};
  if (!(fingerprint(g) == fingerprint(h))) return std::nullopt;

  std::vector<Perm> gens = irredundant_generators(g);
  auto class_size = [](const PermGroup& grp, std::size_t i) { return grp.classes()[grp.class_index()[i]].size(); };
  // Small classes first keeps the candidate lists short.
  std::sort(gens.begin(), gens.end(), [&](const Perm& x, const Perm& y) {
    const auto cx = class_size(g, g.index(x)), cy = class_size(g, g.index(y));
    return cx != cy ? cx < cy : x < y;
  });
  const CayleyGraph cg = cayley(g, gens);

  const std::size_t k = gens.size();
  std::vector<std::size_t> gidx;
  for (const auto& x : gens) gidx.push_back(g.index(x));

  // Candidate pools by (order, class size); the first image only needs to
  // range over class representatives.
  std::vector<std::vector<std::size_t>> pool(k);
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t ord = g.order_of(gidx[t]);
    const std::size_t cs = class_size(g, gidx[t]);
    if (t == 0) {
      for (const auto& cls : h.classes())
        if (cls.size() == cs && h.order_of(cls.front()) == ord) pool[t].push_back(cls.front());
    } else {
      for (std::size_t y = 0; y < h.order(); ++y)
        if (h.order_of(y) == ord && class_size(h, y) == cs) pool[t].push_back(y);
    }
  }

  std::vector<std::size_t> chosen(k);
  std::vector<Perm> images(k);
  std::optional<Isomorphism> found;
  auto rec = [&](auto&& self, std::size_t t) -> bool {
    if (t == k) {
      if (!extends_to_isomorphism(h, cg, images)) return false;
      found = Isomorphism{gens, images};
      return true;
    }
    for (const std::size_t y : pool[t]) {
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s) {
        ok = g.order_of(g.mul(gidx[s], gidx[t])) == h.order_of(h.mul(chosen[s], y));
        if (ok) ok = class_size(g, g.mul(gidx[s], gidx[t])) == class_size(h, h.mul(chosen[s], y));
      }
      if (!ok) continue;
      chosen[t] = y;
      images[t] = h.element(y);
      if (self(self, t + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

bool isomorphic(const PermGroup& g, const PermGroup& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace tpg::perm
