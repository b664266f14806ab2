#include "tpg/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace tpg::classify {

namespace {

using fp::Word;

struct CatalogSpec {
  const char* name;
  const char* type;
  std::array<int, 3> mnp;
  std::array<int, 5> r;
  std::size_t order;
  std::size_t degree;  // 0: built from the presentation
  std::array<const char*, 3> printed;
  enum class Labeling { AsPrinted, ProductFirst } labeling;
};

// For G7 the printed triple repeats a as c, so the group is built from the
// presentation; the words of its row are read in the labeling ab, b, c.
const std::vector<CatalogSpec>& specs() {
  using L = CatalogSpec::Labeling;
  static const std::vector<CatalogSpec> s = {
      {"G1", "2wr2^2", {4, 4, 4}, {}, 64, 8, {"(1,2)(3,4)", "(1,3)(2,4)(5,6)(7,8)", "(1,5)(2,7)"}, L::AsPrinted},
      {"G2", "(S3xS3):2^2", {4, 4, 6}, {}, 144, 10, {"(1,2)(3,4)", "(5,6)(7,8)", "(1,2)(3,9)(4,5)(6,10)"}, L::AsPrinted},
      {"G3", "2^4:D10", {4, 5, 5}, {}, 160, 0, {}, L::AsPrinted},
      {"G4", "2xS5", {4, 5, 6}, {}, 240, 9, {"(1,2)(3,4)", "(1,2)(3,4)(5,6)(7,8)", "(1,9)(2,5)(3,4)(7,8)"}, L::AsPrinted},
      {"G5", "L2(11)", {5, 5, 5}, {}, 660, 0, {}, L::AsPrinted},
      {"G6", "(2^4:D12)x2", {4, 6, 6}, {4, 0, 0, 0, 0}, 384, 12,
       {"(1,2)(3,4)", "(1,3)(2,4)(5,6)(7,8)(9,10)(11,12)", "(1,2)(3,5)(4,7)(6,9)(8,11)(10,12)"}, L::AsPrinted},
      {"G7", "2^4:A5", {5, 5, 6}, {0, 5, 0, 0, 0}, 960, 0, {}, L::ProductFirst},
      {"G8", "2xS6", {5, 6, 6}, {0, 4, 0, 0, 0}, 1440, 10,
       {"(1,2)(7,8)", "(1,2)(3,4)(5,6)(9,10)", "(1,3)(4,5)(7,8)(9,10)"}, L::ProductFirst},
      {"G9", "(2^4:(S3xS3))x2", {6, 6, 6}, {4, 6, 6, 0, 0}, 1152, 12,
       {"(1,2)(3,4)(5,6)(7,8)", "(1,8)(2,7)(3,4)(5,6)", "(2,5)(3,6)(9,10)(11,12)"}, L::AsPrinted},
      {"G10", "2^5:S5", {6, 6, 6}, {5, 5, 5, 4, 0}, 3840, 12,
       {"(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)", "(1,3)(2,4)(5,8)(6,7)(9,12)(10,11)",
        "(1,7)(2,6)(3,9)(4,11)(5,10)(8,12)"},
       L::AsPrinted},
      {"G11", "(3^4:2):(3^(1+2):2^2)", {6, 6, 6}, {6, 6, 6, 0, 3}, 17496, 0, {}, L::AsPrinted},
  };
  return s;
}

fp::ExtraExponents extras(const std::array<int, 5>& r) {
  fp::ExtraExponents e;
  for (std::size_t i = 0; i < 5; ++i)
    if (r[i]) e[i] = r[i];
  return e;
}

std::array<Perm, 3> product_first(const std::array<Perm, 3>& t) { return {t[0] * t[1], t[1], t[2]}; }

Perm eval(const std::string& w, const std::array<Perm, 3>& t) { return fp::evaluate_word(Word::parse(w), t); }

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex m;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(m);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// Subgroup of g with the given element indices, which must form a group.
PermGroup materialize(const PermGroup& g, const std::vector<std::size_t>& members) {
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> cur{0};
  in[0] = 1;
  std::vector<std::size_t> gens;
  for (const std::size_t x : members) {
    if (in[x]) continue;
    gens.push_back(x);
    in[x] = 1;
    cur.push_back(x);
    for (std::size_t q = 0; q < cur.size(); ++q)
      for (const std::size_t s : gens) {
        const std::size_t y = g.mul(cur[q], s);
        if (!in[y]) {
          in[y] = 1;
          cur.push_back(y);
        }
      }
  }
  if (cur.size() != members.size()) throw std::logic_error("class union is not a subgroup");
  std::vector<Perm> gp, el;
  for (auto s : gens) gp.push_back(g.element(s));
  for (auto x : members) el.push_back(g.element(x));
  return PermGroup::from_elements(g.degree(), std::move(gp), std::move(el));
}

struct ExplicitTriple {
  std::size_t degree;
  std::array<const char*, 3> gens;
};

const std::map<std::string, ExplicitTriple>& explicit_triples() {
  static const std::map<std::string, ExplicitTriple> m = {
      {"S6", {6, {"(1,2)(3,4)(5,6)", "(5,6)", "(2,3)(4,5)"}}},
      {"2^4:S5",
       {16,
        {"(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)", "(1,3)(2,4)(5,6)(7,8)(13,14)(15,16)",
         "(1,12)(3,14)(4,6)(5,16)(7,11)(9,13)"}}},
      {"S3xS3xS3", {9, {"(1,2)(4,5)", "(4,5)(7,8)", "(1,3)(4,6)(7,9)"}}},
      {"2x(3^(1+2):2^2)", {11, {"(1,4)(2,6)(3,5)(8,9)", "(1,4)(2,8)(6,9)(10,11)", "(2,7)(3,4)(5,9)"}}},
  };
  return m;
}

/// Words whose normal closure gives the excluded type as a quotient of its
/// parent; empty for the parent itself.
const std::map<std::string, std::pair<std::string, std::vector<std::string>>>& quotient_sources() {
  static const std::map<std::string, std::pair<std::string, std::vector<std::string>>> m = {
      {"2xS3xS3", {"G9", {"(a*b^c)^2"}}},
      {"(2^4:(S3xS3))x2", {"G9", {}}},
      {"(3:2):(3^(1+2):2^2)", {"G11", {"(ab*a^{cbc})^2", "(a*b^{cabc})^2"}}},
      {"(3^2:2):(3^(1+2):2^2)", {"G11", {"(a*b^{cabc})^2"}}},
      {"(3^3:2):(3^(1+2):2^2)", {"G11", {"c^{acbcacb}*c^{bcacbca}"}}},
      {"(3^4:2):(3^(1+2):2^2)", {"G11", {}}},
  };
  return m;
}

struct Config {
  PermGroup group;
  std::array<Perm, 3> triple;
  std::string source;
};

std::optional<Config> explicit_config(const std::string& name) {
  auto it = explicit_triples().find(name);
  if (it == explicit_triples().end()) return std::nullopt;
  std::array<Perm, 3> t;
  for (std::size_t i = 0; i < 3; ++i) t[i] = Perm::parse(it->second.gens[i], it->second.degree);
  return Config{PermGroup::generate(it->second.degree, {t[0], t[1], t[2]}), t, "explicit generators"};
}

Config quotient_config(const std::string& name, const CatalogEntry& parent) {
  const auto& [pname, words] = quotient_sources().at(name);
  if (words.empty()) return Config{parent.group, parent.generators, pname};
  std::vector<Perm> xs;
  for (const auto& w : words) xs.push_back(eval(w, parent.table_generators));
  PermGroup n = perm::normal_closure(parent.group, xs);
  CompactQuotient q = compact_quotient(parent.group, n, parent.generators);
  std::string src = pname + "/<";
  for (std::size_t i = 0; i < words.size(); ++i) src += (i ? ", " : "") + words[i];
  src += ">^G";
  return Config{q.group, {q.tracked[0], q.tracked[1], q.tracked[2]}, src};
}

const ExcludedRow& excluded_row(const std::string& name) {
  for (const auto& row : excluded_rows())
    if (same_type(row.name, name)) return row;
  throw std::out_of_range("not an excluded type: " + name);
}

std::string source_label(const QuotientRecord& q) {
  std::string s = q.parent + "/";
  if (q.printed_row) {
    s += "<";
    for (std::size_t i = 0; i < q.words.size(); ++i) s += (i ? ", " : "") + q.words[i];
    return s + ">^G";
  }
  return s + "N" + std::to_string(q.normal_order) + "(unlisted)";
}

bool is_reference_name(const std::string& name) {
  try {
    reference(name);
    return true;
  } catch (const std::out_of_range&) {
    return false;
  }
}

}  // namespace

fp::Presentation CatalogEntry::presentation() const { return fp::tp_presentation(mnp[0], mnp[1], mnp[2], extras(r)); }

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : specs()) v.push_back(s.name);
    return v;
  }();
  return names;
}

CatalogEntry catalog_entry(const std::string& name, std::size_t capacity) {
  auto it = std::find_if(specs().begin(), specs().end(), [&](const CatalogSpec& s) { return name == s.name; });
  if (it == specs().end()) throw std::out_of_range("unknown catalog group " + name);
  const CatalogSpec& s = *it;
  CatalogEntry e;
  e.name = s.name;
  e.type = s.type;
  e.mnp = s.mnp;
  e.r = s.r;
  e.order = s.order;
  const fp::Presentation pres = e.presentation();
  try {
    e.coset_count = fp::presented_order(pres, capacity);
    if (s.degree) {
      std::array<Perm, 3> printed;
      for (std::size_t i = 0; i < 3; ++i) printed[i] = Perm::parse(s.printed[i], s.degree);
      e.table_generators = printed;
      e.generators = s.labeling == CatalogSpec::Labeling::ProductFirst ? product_first(printed) : printed;
      e.construction = s.labeling == CatalogSpec::Labeling::ProductFirst ? "printed generators, relabeled a -> ab"
                                                                         : "printed generators";
      e.group = PermGroup::generate(s.degree, {e.generators[0], e.generators[1], e.generators[2]});
    } else {
      PresentedAction act =
          faithful_action(pres, {{"a", "(bc)^2"}, {"a", "b"}, {"a", "c"}, {"b", "c"}, {"a"}, {}}, capacity);
      e.generators = act.images;
      e.table_generators = s.labeling == CatalogSpec::Labeling::ProductFirst ? product_first(act.images) : act.images;
      e.group = act.group;
      std::string sub;
      for (std::size_t i = 0; i < act.subgroup.size(); ++i) sub += (i ? ", " : "") + act.subgroup[i];
      e.construction = "action on the " + std::to_string(act.group.degree()) + " cosets of <" + sub + ">";
    }
  } catch (const fp::CosetCapacityError& err) {
    throw CatalogError(name + ": coset enumeration exceeded capacity: " + err.what());
  }
  if (!fp::verify_presentation(pres, e.generators, e.group))
    throw CatalogError(name + ": generators do not satisfy the presentation");
  if (e.group.order() != e.coset_count)
    throw CatalogError(name + ": permutation group order " + std::to_string(e.group.order()) +
                       " differs from coset count " + std::to_string(e.coset_count));
  if (e.group.order() != e.order)
    throw CatalogError(name + ": order " + std::to_string(e.group.order()) + ", expected " + std::to_string(e.order));
  return e;
}

std::vector<CatalogEntry> catalog(std::size_t capacity) {
  std::vector<CatalogEntry> out;
  for (const auto& n : catalog_names()) out.push_back(catalog_entry(n, capacity));
  return out;
}

std::vector<PermGroup> normal_subgroups_index_gt(const PermGroup& g, std::size_t bound) {
  const auto& classes = g.classes();
  const auto& cls = g.class_index();
  const std::size_t k = classes.size();
  // prod[i][j]: classes meeting C_i * C_j.
  std::vector<std::vector<std::vector<std::size_t>>> prod(k, std::vector<std::vector<std::size_t>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t x = classes[i].front();
    for (std::size_t j = 0; j < k; ++j) {
      std::set<std::size_t> hit;
      for (const std::size_t y : classes[j]) hit.insert(cls[g.mul(x, y)]);
      prod[i][j].assign(hit.begin(), hit.end());
    }
  }
  using Bits = std::vector<bool>;
  auto close = [&](Bits u) {
    u[0] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (!u[i]) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (!u[j]) continue;
          for (const std::size_t c : prod[i][j])
            if (!u[c]) u[c] = changed = true;
        }
      }
    }
    return u;
  };
  std::set<Bits> lattice;
  for (std::size_t i = 1; i < k; ++i) {
    Bits u(k, false);
    u[i] = true;
    lattice.insert(close(u));
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Bits> cur(lattice.begin(), lattice.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        Bits u(k);
        for (std::size_t c = 0; c < k; ++c) u[c] = cur[i][c] || cur[j][c];
        if (lattice.insert(close(u)).second) grew = true;
      }
  }
  std::vector<std::vector<std::size_t>> keep;
  for (const auto& u : lattice) {
    std::vector<std::size_t> members;
    for (std::size_t c = 0; c < k; ++c)
      if (u[c]) members.insert(members.end(), classes[c].begin(), classes[c].end());
    if (members.size() <= 1 || g.order() / members.size() <= bound) continue;
    std::sort(members.begin(), members.end());
    keep.push_back(std::move(members));
  }
  std::sort(keep.begin(), keep.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  std::vector<PermGroup> out;
  for (const auto& m : keep) out.push_back(materialize(g, m));
  return out;
}

CompactQuotient compact_quotient(const PermGroup& g, const PermGroup& n, const std::array<Perm, 3>& abc) {
  const std::size_t target = g.order() / n.order();
  const std::vector<std::vector<std::string>> hints = {{"a", "(bc)^2"}, {"a", "b"}, {"a", "c"}, {"b", "c"},
                                                       {"a"},           {"b"},      {"c"}};
  std::vector<PermGroup> ms;
  for (const auto& h : hints) {
    std::vector<Perm> gens = n.generators();
    for (const auto& w : h) gens.push_back(eval(w, abc));
    PermGroup m = perm::subgroup(g, gens);
    if (m.order() > n.order()) ms.push_back(m);
  }
  std::stable_sort(ms.begin(), ms.end(), [](const PermGroup& x, const PermGroup& y) { return x.order() > y.order(); });
  const auto& e = g.elements();
  for (const auto& m : ms) {
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(e.size(), kUnset), reps;
    for (std::size_t x = 0; x < e.size(); ++x) {
      if (label[x] != kUnset) continue;
      for (const auto& y : m.elements()) label[g.index(y * e[x])] = reps.size();
      reps.push_back(x);
    }
    if (reps.size() > perm::kMaxDegree) continue;
    auto act = [&](const Perm& t) {
      std::vector<perm::Point> img(reps.size());
      for (std::size_t c = 0; c < reps.size(); ++c) img[c] = static_cast<perm::Point>(label[g.index(e[reps[c]] * t)]);
      return Perm(std::move(img));
    };
    std::vector<Perm> gens;
    for (const auto& s : g.generators()) gens.push_back(act(s));
    PermGroup q = PermGroup::generate(reps.size(), gens, target);
    if (q.order() != target) continue;
    return {q, {act(abc[0]), act(abc[1]), act(abc[2])}};
  }
  perm::Quotient q = perm::quotient(g, n, abc);
  return {q.group, q.tracked};
}

const std::vector<PrintedRow>& printed_rows() {
  static const std::vector<PrintedRow> rows = {
      {"G1", "2^2", 4, {"(ac)^2"}, "2xD8"},
      {"G1", "2^2", 4, {"(bc)^2"}, "2xD8"},
      {"G1", "2^2", 4, {"(abc)^2"}, "2xD8"},
      {"G1", "2", 2, {"(a*b^c)^2"}, "2^4:2"},
      {"G2", "3^2", 9, {"(a*b^c)^2"}, "2xD8"},
      {"G2", "2", 2, {"(a*b^c)^3"}, "(S3xS3):2"},
      {"G4", "2", 2, {"(ac)^2"}, "S5", {"(ab*a^c)^3"}},
      {"G6", "2^4", 16, {"(bc)^3", "(abc)^3"}, "S4"},
      {"G6", "2^4", 16, {"(ac)^2"}, "2^2xS3"},
      {"G6", "2^3", 8, {"(ab*b^c)^3", "(a^c*c^b)^2"}, "2xS4"},
      {"G6", "2^3", 8, {"(bc)^3"}, "2xS4"},
      {"G6", "2^3", 8, {"(abc)^3"}, "2xS4"},
      {"G6", "2^2", 4, {"(a^c*c^b)^2"}, "2^2xS4"},
      {"G6", "2", 2, {"(ab*b^c)^3"}, "2^4:D12"},
      {"G7", "2^4", 16, {"(ac)^3"}, "A5"},
      {"G8", "2", 2, {"((bc)^3*b^{ca})^3"}, "S6"},
      {"G9", "2^4:3", 48, {"(ac)^2", "(a*b^c)^2"}, "2^2xS3"},
      {"G9", "2^4:3", 48, {"(bc)^2", "(a*b^c)^2"}, "2^2xS3"},
      {"G9", "2^5", 32, {"(abc)^2", "(a*b^c)^2"}, "S3xS3", {"(abc)^3", "(a*b^c)^2"}},
      {"G9", "2^4", 16, {"(a*b^c)^2"}, "2xS3xS3"},
      {"G9", "2", 2, {"a*(b*c^{ac})^3"}, "2^4:(S3xS3)"},
      {"G10", "2^5", 32, {"((ac)^2(bc)^2)^2"}, "S5"},
      {"G10", "2", 2, {"(c^a*(bc)^3)^3"}, "2^4:S5"},
      {"G11", "(3^4:3):3", 729, {"(ac)^2"}, "2^2xS3"},
      {"G11", "(3^4:3):3", 729, {"(bc)^2", "(a*b^c)^2"}, "2^2xS3"},
      {"G11", "(3^4:3):3", 729, {"(abc)^2"}, "2^2xS3"},
      {"G11", "(3^4:3):2", 486, {"(ac)^3", "(ab*b^c)^2"}, "S3xS3"},
      {"G11", "(3^4:3):2", 486, {"(bc)^3", "(ab*a^c)^2"}, "S3xS3"},
      {"G11", "(3^4:3):2", 486, {"(abc)^3", "(a*a^c)^2"}, "S3xS3", {"(abc)^3", "(a*b^c)^2"}},
      {"G11", "3^4:3", 243, {"(a*b^c)^2"}, "2xS3xS3"},
      {"G11", "3^4:3", 243, {"(ab*b^c)^2"}, "2xS3xS3"},
      {"G11", "3^4:3", 243, {"(ab*a^c)^2"}, "2xS3xS3"},
      {"G11", "3^4:2", 162, {"(ac)^3"}, "3^(1+2):2^2"},
      {"G11", "3^4:2", 162, {"(bc)^3"}, "3^(1+2):2^2"},
      {"G11", "3^4:2", 162, {"(abc)^3"}, "3^(1+2):2^2"},
      {"G11", "3^4", 81, {"(acbcacb)^2"}, "S3xS3xS3"},
      {"G11", "3^4", 81, {"(a*c^{bc})^2"}, "2x(3^(1+2):2^2)"},
      {"G11", "3^4", 81, {"(b*c^{ac})^2"}, "2x(3^(1+2):2^2)"},
      {"G11", "3^4", 81, {"(ab*c^{ac})^2"}, "2x(3^(1+2):2^2)", {"(b*c^{abc})^2"}},
      {"G11", "3^3", 27, {"(ab*a^{cbc})^2", "(a*b^{cabc})^2"}, "S3:(3^(1+2):2^2)"},
      {"G11", "3^3", 27, {"(ab*b^{cac})^2", "(a*b^{cabc})^2"}, "S3:(3^(1+2):2^2)"},
      {"G11", "3^3", 27, {"(ab*b^{cac})^2", "(ab*a^{cbc})^2"}, "S3:(3^(1+2):2^2)"},
      {"G11", "3^2", 9, {"(a*b^{cabc})^2"}, "(3^2:2):(3^(1+2):2^2)"},
      {"G11", "3^2", 9, {"(ab*b^{cac})^2"}, "(3^2:2):(3^(1+2):2^2)"},
      {"G11", "3^2", 9, {"(ab*a^{cbc})^2"}, "(3^2:2):(3^(1+2):2^2)"},
      {"G11", "3", 3, {"c^{acbcacb}*c^{bcacbca}"}, "(3^3:2):(3^(1+2):2^2)"},
  };
  return rows;
}

std::vector<QuotientRecord> quotients(const CatalogEntry& entry) {
  const PermGroup& g = entry.group;
  std::vector<PermGroup> normals = normal_subgroups_index_gt(g, 12);
  std::vector<std::optional<std::size_t>> row_of(normals.size());
  std::vector<std::vector<std::string>> words_of(normals.size());
  std::vector<bool> printed(normals.size(), true);
  const auto& rows = printed_rows();
  auto match = [&](std::size_t r, const std::vector<std::string>& words) {
    std::vector<Perm> xs;
    for (const auto& w : words) xs.push_back(eval(w, entry.table_generators));
    const PermGroup nr = perm::normal_closure(g, xs);
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (row_of[i] || normals[i].order() != nr.order()) continue;
      const auto& gens = nr.generators();
      if (std::all_of(gens.begin(), gens.end(), [&](const Perm& x) { return normals[i].contains(x); })) {
        row_of[i] = r;
        words_of[i] = words;
        return std::optional<std::size_t>(i);
      }
    }
    return std::optional<std::size_t>();
  };
  std::vector<std::size_t> missed;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].parent == entry.name && !match(r, rows[r].words)) missed.push_back(r);
  for (const std::size_t r : missed)
    if (!rows[r].corrected.empty())
      if (auto i = match(r, rows[r].corrected)) printed[*i] = false;
  std::vector<QuotientRecord> out;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    QuotientRecord q;
    q.parent = entry.name;
    q.normal = normals[i];
    q.normal_order = normals[i].order();
    q.printed_row = row_of[i];
    q.words = words_of[i];
    q.printed_words = printed[i];
    CompactQuotient cq = compact_quotient(g, normals[i], entry.generators);
    q.quotient = cq.group;
    q.quotient_order = cq.group.order();
    q.images = {cq.tracked[0], cq.tracked[1], cq.tracked[2]};
    q.type = identify(cq.group);
    q.triangle_point = is_triangle_point(cq.group, q.images[0], q.images[1], q.images[2]);
    out.push_back(std::move(q));
  }
  std::stable_sort(out.begin(), out.end(), [](const QuotientRecord& x, const QuotientRecord& y) {
    const std::size_t kx = x.printed_row.value_or(static_cast<std::size_t>(-1));
    const std::size_t ky = y.printed_row.value_or(static_cast<std::size_t>(-1));
    return kx < ky;
  });
  return out;
}

bool is_triangle_point(const PermGroup& g, const Perm& a, const Perm& b, const Perm& c) {
  const Perm ab = a * b;
  for (const Perm* x : {&a, &b, &c, &ab})
    if (x->order() != 2 || !g.contains(*x)) return false;
  if (PermGroup::generate(g.degree(), {a, b, c}, g.order()).order() != g.order()) return false;
  const auto& cls = g.class_index();
  std::set<std::size_t> xc;
  for (const Perm* x : {&a, &b, &c, &ab}) xc.insert(cls[g.index(*x)]);
  std::vector<std::size_t> xs;
  for (const std::size_t k : xc) xs.insert(xs.end(), g.classes()[k].begin(), g.classes()[k].end());
  // o(ts) is a class function of the pair, so t may be a class representative.
  for (const std::size_t k : xc) {
    const std::size_t t = g.classes()[k].front();
    for (const std::size_t s : xs)
      if (g.order_of(g.mul(t, s)) > 6) return false;
  }
  return true;
}

std::vector<SmallTriangleGroup> small_tp_groups() {
  std::vector<SmallTriangleGroup> out;
  for (const auto& sg : small_groups()) {
    const PermGroup& g = sg.group;
    std::vector<std::size_t> inv;
    for (std::size_t i = 0; i < g.order(); ++i)
      if (g.order_of(i) == 2) inv.push_back(i);
    std::optional<std::array<Perm, 3>> found;
    for (std::size_t a : inv) {
      for (std::size_t b : inv) {
        if (g.order_of(g.mul(a, b)) != 2) continue;
        for (std::size_t c : inv) {
          if (is_triangle_point(g, g.element(a), g.element(b), g.element(c))) {
            found = std::array<Perm, 3>{g.element(a), g.element(b), g.element(c)};
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (found) out.push_back({sg.name, g, *found});
  }
  return out;
}

const std::vector<ExcludedRow>& excluded_rows() {
  static const std::vector<ExcludedRow> rows = {
      {"2xS3xS3", 72, {"G9", "G11"}},
      {"S6", 720, {"G8"}},
      {"(2^4:(S3xS3))x2", 1152, {"G9"}},
      {"2^4:S5", 1920, {"G10"}},
      {"S3xS3xS3", 216, {"G11"}},
      {"2x(3^(1+2):2^2)", 216, {"G11"}},
      {"(3:2):(3^(1+2):2^2)", 648, {"G11"}},
      {"(3^2:2):(3^(1+2):2^2)", 1944, {"G11"}},
      {"(3^3:2):(3^(1+2):2^2)", 5832, {"G11"}},
      {"(3^4:2):(3^(1+2):2^2)", 17496, {"G11"}},
  };
  return rows;
}

std::vector<Discrepancy> row_discrepancies(const std::string& parent, const std::vector<QuotientRecord>& records) {
  std::vector<Discrepancy> out;
  const auto& rows = printed_rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].parent != parent) continue;
    auto it = std::find_if(records.begin(), records.end(), [&](const QuotientRecord& q) { return q.printed_row == r; });
    if (it != records.end() && !it->printed_words) {
      std::string printed, used;
      for (const auto& w : rows[r].words) printed += (printed.empty() ? "" : ", ") + w;
      for (const auto& w : it->words) used += (used.empty() ? "" : ", ") + w;
      out.push_back({"printed-words", parent + ": printed <" + printed + ">^G is not the listed subgroup of order " +
                                          std::to_string(rows[r].normal_order) + "; <" + used + ">^G is"});
    }
    if (it == records.end()) {
      out.push_back({"row-unmatched",
                     parent + " row with N = <" + rows[r].words.front() + ", ...>^G matches no computed normal subgroup"});
    } else if (it->normal_order != rows[r].normal_order) {
      out.push_back({"normal-order", parent + "/<" + rows[r].words.front() + ">^G: printed |N| = " +
                                         std::to_string(rows[r].normal_order) + ", computed " +
                                         std::to_string(it->normal_order)});
    } else if (!same_type(it->type, rows[r].quotient)) {
      out.push_back({"quotient-type", parent + "/<" + rows[r].words.front() + ">^G: printed " + rows[r].quotient +
                                          ", identified " + it->type});
    }
  }
  for (const auto& q : records)
    if (!q.printed_row)
      out.push_back({"extra-normal-subgroup", q.parent + " has an unlisted normal subgroup of order " +
                                                  std::to_string(q.normal_order) + " with quotient " + q.type});
  return out;
}

axial::ObstructionCertificate obstruct_type(const std::string& name, std::size_t capacity) {
  const ExcludedRow& row = excluded_row(name);
  std::optional<Config> cfg = explicit_config(row.name);
  if (!cfg) cfg = quotient_config(row.name, catalog_entry(quotient_sources().at(row.name).first, capacity));
  auto cert = axial::obstruct(axial::t_closure(cfg->group, cfg->triple[0], cfg->triple[1], cfg->triple[2]), row.name);
  if (!cert) throw std::runtime_error("no obstruction found for " + row.name);
  return *cert;
}

ClassificationReport classify_all(const ClassifyOptions& opts) {
  ClassificationReport rep;
  const auto& names = catalog_names();
  rep.catalog.resize(names.size());
  std::vector<std::vector<QuotientRecord>> per(names.size());
  references();
  parallel_for(names.size(), opts.jobs, [&](std::size_t i) {
    rep.catalog[i] = catalog_entry(names[i], opts.capacity);
    per[i] = quotients(rep.catalog[i]);
  });
  for (auto& v : per)
    for (auto& q : v) rep.quotients.push_back(std::move(q));
  rep.small = small_tp_groups();

  for (const auto& name : names) {
    std::vector<QuotientRecord> mine;
    for (const auto& q : rep.quotients)
      if (q.parent == name) mine.push_back(q);
    for (auto& d : row_discrepancies(name, mine)) rep.discrepancies.push_back(std::move(d));
  }

  // Deduplication.
  auto add_candidate = [&](const std::string& name, const PermGroup& g, const std::array<Perm, 3>& t,
                           const std::string& source) {
    for (auto& ty : rep.types) {
      if (ty.order != g.order()) continue;
      const bool same = is_reference_name(ty.name) && is_reference_name(name) ? same_type(ty.name, name)
                                                                               : perm::isomorphic(ty.group, g);
      if (same) {
        ty.sources.push_back(source);
        return;
      }
    }
    TypeRecord ty;
    ty.name = name;
    ty.order = g.order();
    ty.sources = {source};
    ty.group = g;
    ty.triple = t;
    rep.types.push_back(std::move(ty));
  };
  for (const auto& s : rep.small) add_candidate(canonical_name(s.name), s.group, s.triple, "order " + std::to_string(s.group.order()) + ": " + s.name);
  std::size_t qi = 0;
  for (std::size_t i = 0; i < rep.catalog.size(); ++i) {
    const auto& e = rep.catalog[i];
    std::string name = identify(e.group);
    if (name.starts_with("?")) name = e.type;
    add_candidate(name, e.group, e.generators, e.name);
    for (; qi < rep.quotients.size() && rep.quotients[qi].parent == e.name; ++qi) {
      const auto& q = rep.quotients[qi];
      if (!q.triangle_point) {
        rep.degenerate.push_back(source_label(q) + " (" + q.type + ")");
        continue;
      }
      add_candidate(q.type, q.quotient, q.images, source_label(q));
    }
  }

  // Obstructions.
  std::vector<std::size_t> targets;
  for (const auto& row : excluded_rows()) {
    auto it = std::find_if(rep.types.begin(), rep.types.end(), [&](const TypeRecord& t) { return same_type(t.name, row.name); });
    if (it == rep.types.end()) throw std::runtime_error("excluded type " + row.name + " was not produced");
    if (it->order != row.order)
      rep.discrepancies.push_back({"excluded-order", row.name + ": printed order " + std::to_string(row.order) +
                                                         ", computed " + std::to_string(it->order)});
    targets.push_back(static_cast<std::size_t>(it - rep.types.begin()));
  }
  std::vector<Config> configs(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) {
    TypeRecord& ty = rep.types[targets[k]];
    std::optional<Config> c = explicit_config(excluded_rows()[k].name);
    if (c && !perm::isomorphic(c->group, ty.group)) {
      rep.discrepancies.push_back({"explicit-generators", excluded_rows()[k].name +
                                                              ": explicit generators give a different group"});
      c.reset();
    }
    configs[k] = c ? *c : Config{ty.group, ty.triple, ty.sources.front()};
  }
  std::vector<std::optional<axial::ObstructionCertificate>> certs(targets.size());
  parallel_for(targets.size(), opts.jobs, [&](std::size_t k) {
    const Config& c = configs[k];
    certs[k] = axial::obstruct(axial::t_closure(c.group, c.triple[0], c.triple[1], c.triple[2]),
                               rep.types[targets[k]].name);
  });
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (!certs[k]) throw std::runtime_error("no obstruction found for " + rep.types[targets[k]].name);
    TypeRecord& ty = rep.types[targets[k]];
    ty.excluded = true;
    ty.certificate = std::move(certs[k]);
    ty.certificate_source = configs[k].source;
  }
  for (const auto& ty : rep.types)
    if (!ty.excluded) rep.admissible.push_back(ty.name);

  if (rep.types.size() != rep.printed_total)
    rep.discrepancies.push_back({"total-count", "computed " + std::to_string(rep.types.size()) +
                                                    " distinct triangle-point types, printed " +
                                                    std::to_string(rep.printed_total)});
  if (rep.admissible.size() != rep.printed_admissible)
    rep.discrepancies.push_back({"admissible-count", "computed " + std::to_string(rep.admissible.size()) +
                                                         " admissible types, printed " +
                                                         std::to_string(rep.printed_admissible)});
  return rep;
}

}  // namespace tpg::classify
