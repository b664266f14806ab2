#include "tpg/coset_enum.hpp"

#include <string>

namespace tpg::fp {

namespace {

constexpr std::int32_t kUndef = -1;

class Enumerator {
 public:
  Enumerator(const Presentation& pres, const std::vector<Word>& subgroup, std::size_t capacity)
      : capacity_(capacity) {
    for (const auto& r : pres.relators()) {
      auto w = to_ints(r.word().reduced());
      // Cyclic reduction: the scans below treat relators cyclically.
      while (w.size() >= 2 && w.front() == w.back()) {
        w.erase(w.begin());
        w.pop_back();
      }
      if (!w.empty()) relators_.push_back(std::move(w));
    }
    for (const auto& h : subgroup) {
      auto w = to_ints(h.reduced());
      if (!w.empty()) subgroup_.push_back(std::move(w));
    }
    for (std::size_t r = 0; r < relators_.size(); ++r)
      for (std::size_t i = 0; i < relators_[r].size(); ++i)
        starts_[relators_[r][i]].push_back({r, i});
  }

  CosetTable run() {
    new_coset();
    for (const auto& w : subgroup_) scan_and_fill(w, 0);
    process_deductions();
    std::size_t first_open = 0;
    for (;;) {
      // First undefined entry, in row order.
      bool found = false;
      std::size_t c = first_open;
      int g = 0;
      for (; c < table_.size() && !found; ++c) {
        if (!alive(c)) continue;
        for (g = 0; g < 3; ++g)
          if (table_[c][g] == kUndef) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) break;
      first_open = c;
      const std::int32_t d = new_coset();
      define(static_cast<std::int32_t>(c), g, d);
      process_deductions();
    }
    return standardize();
  }

 private:
  using Letters = std::vector<int>;

  static Letters to_ints(const Word& w) {
    Letters out;
    for (Gen g : w.letters()) out.push_back(static_cast<int>(g));
    return out;
  }

  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::int32_t find(std::int32_t c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  std::int32_t new_coset() {
    if (table_.size() >= capacity_)
      throw CosetCapacityError("coset table capacity of " + std::to_string(capacity_) + " rows exhausted");
    const auto c = static_cast<std::int32_t>(table_.size());
    table_.push_back({kUndef, kUndef, kUndef});
    parent_.push_back(c);
    ++live_;
    peak_ = std::max(peak_, live_);
    return c;
  }

  void define(std::int32_t c, int g, std::int32_t d) {
    table_[c][g] = d;
    table_[d][g] = c;
    deductions_.push_back({c, g});
  }

  /// Traces the cyclic word w from c, defining new cosets to close gaps.
  void scan_and_fill(const Letters& w, std::int32_t c) {
    std::int32_t f = c;
    std::size_t i = 0;
    const std::size_t n = w.size();
    std::int32_t b = c;
    std::size_t j = n;
    for (;;) {
      while (i < j && table_[f][w[i]] != kUndef) f = table_[f][w[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_[b][w[j - 1]] != kUndef) b = table_[b][w[--j]];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        define(f, w[i], b);
        return;
      }
      const std::int32_t d = new_coset();
      define(f, w[i], d);
    }
  }

  /// Traces w from c without defining cosets; deduces a single missing entry.
  void scan(const Letters& w, std::size_t start, std::int32_t c) {
    const std::size_t n = w.size();
    std::int32_t f = c;
    std::size_t i = 0;
    while (i < n && table_[f][w[(start + i) % n]] != kUndef) f = table_[f][w[(start + i++) % n]];
    if (i == n) {
      if (f != c) coincidence(f, c);
      return;
    }
    std::int32_t b = c;
    std::size_t j = n;
    while (j > i && table_[b][w[(start + j - 1) % n]] != kUndef) b = table_[b][w[(start + --j) % n]];
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      define(f, w[(start + i) % n], b);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, g] = deductions_.back();
      deductions_.pop_back();
      if (!alive(static_cast<std::size_t>(c))) continue;
      const std::int32_t d = table_[c][g];
      if (d == kUndef) continue;
      for (const auto& [r, i] : starts_[g]) {
        scan(relators_[r], i, c);
        if (!alive(static_cast<std::size_t>(c))) break;
        if (alive(static_cast<std::size_t>(d))) scan(relators_[r], i, d);
        if (!alive(static_cast<std::size_t>(c))) break;
      }
      if (alive(0))
        for (const auto& w : subgroup_) scan(w, 0, 0);
    }
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    auto merge = [&](std::int32_t x, std::int32_t y) {
      x = find(x);
      y = find(y);
      if (x == y) return;
      if (y < x) std::swap(x, y);
      parent_[y] = x;
      --live_;
      queue.push_back(y);
    };
    merge(a, b);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::int32_t dead = queue[q];
      for (int g = 0; g < 3; ++g) {
        const std::int32_t d = table_[dead][g];
        if (d == kUndef) continue;
        table_[dead][g] = kUndef;
        if (d != dead && table_[d][g] == dead) table_[d][g] = kUndef;
        const std::int32_t x = find(dead);
        const std::int32_t y = find(d == dead ? dead : d);
        if (table_[x][g] != kUndef) {
          merge(table_[x][g], y);
        } else if (table_[y][g] != kUndef) {
          merge(table_[y][g], x);
        } else {
          table_[x][g] = y;
          table_[y][g] = x;
          deductions_.push_back({x, g});
        }
      }
    }
  }

  CosetTable standardize() {
    std::vector<std::int32_t> order{0};
    std::vector<std::int32_t> renum(table_.size(), kUndef);
    renum[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (int g = 0; g < 3; ++g) {
        const std::int32_t d = table_[order[h]][g];
        if (d == kUndef || !alive(static_cast<std::size_t>(d)))
          throw std::logic_error("coset enumeration finished with an incomplete table");
        if (renum[d] == kUndef) {
          renum[d] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    CosetTable t;
    t.peak_rows = peak_;
    t.rows.resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int g = 0; g < 3; ++g) t.rows[k][g] = static_cast<std::uint32_t>(renum[table_[order[k]][g]]);
    return t;
  }

  std::size_t capacity_;
  std::vector<Letters> relators_;
  std::vector<Letters> subgroup_;
  std::array<std::vector<std::pair<std::size_t, std::size_t>>, 3> starts_;
  std::vector<std::array<std::int32_t, 3>> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::pair<std::int32_t, int>> deductions_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

}  // namespace

bool CosetTable::satisfies(const Presentation& pres, const std::vector<Word>& subgroup) const {
  auto trace = [&](const Word& w, std::size_t c) {
    std::size_t x = c;
    for (Gen g : w.letters()) x = rows[x][static_cast<std::size_t>(g)];
    return x;
  };
  for (std::size_t c = 0; c < rows.size(); ++c)
    for (std::size_t g = 0; g < kNumGens; ++g)
      if (rows[rows[c][g]][g] != c) return false;
  for (const auto& r : pres.relators()) {
    const Word w = r.word();
    for (std::size_t c = 0; c < rows.size(); ++c)
      if (trace(w, c) != c) return false;
  }
  for (const auto& h : subgroup)
    if (trace(h, 0) != 0) return false;
  return true;
}

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup, std::size_t capacity) {
  CosetTable t = Enumerator(pres, subgroup, capacity).run();
  if (!t.satisfies(pres, subgroup)) throw std::logic_error("coset enumeration produced an inconsistent table");
  return t;
}

std::size_t presented_order(const Presentation& pres, std::size_t capacity) {
  return todd_coxeter(pres, {}, capacity).size();
}

CosetAction coset_action(const CosetTable& table) {
  const std::size_t n = table.size();
  if (n > perm::kMaxDegree) throw perm::CapacityError("coset action degree exceeds the permutation limit");
  std::array<std::vector<perm::Point>, kNumGens> img;
  for (auto& v : img) v.resize(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < kNumGens; ++g) img[g][c] = static_cast<perm::Point>(table.rows[c][g]);
  CosetAction act{perm::PermGroup(), {perm::Perm(img[0]), perm::Perm(img[1]), perm::Perm(img[2])}};
  act.group = perm::PermGroup::deferred(n, {act.images[0], act.images[1], act.images[2]});
  return act;
}

}  // namespace tpg::fp
