// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "support.hpp"
#include "tpg/axial.hpp"
#include "tpg/certificate.hpp"
#include "tpg/classify.hpp"
#include "tpg/coset_enum.hpp"
#include "tpg/dihedral.hpp"
#include "tpg/report.hpp"

namespace {

using namespace tpg;
using perm::Perm;
using perm::PermGroup;
using qlin::ratio;
using qlin::Rational;
using oracle::p;

struct Outcome {
  std::vector<std::string> failures;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int run(int number, double limit_s, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) {
    std::ostringstream m;
    m << "took " << s << " s, limit " << limit_s << " s";
    o.failures.push_back(m.str());
  }
  const bool ok = o.failures.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " " << number << " " << title << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << s << " s)";
  if (!o.note.empty()) std::cout << " " << o.note;
  std::cout << "\n";
  for (const auto& f : o.failures) std::cout << "     - " << f << "\n";
  return ok ? 0 : 1;
}

std::string str(const Rational& r) { return qlin::to_string(r); }

// 1 -----------------------------------------------------------------------

void dihedral_suite(Outcome& o) {
  using dihedral::Type;
  for (Type t : dihedral::all_types()) {
    const auto a = dihedral::build(t);
    const std::string n(dihedral::name(t));
    auto check = [&](const dihedral::CheckReport& r) {
      o.require(r.ok(), n + " " + r.check + ": " + (r.ok() ? "" : r.violations.front()));
    };
    check(dihedral::check_m1(a));
    for (const auto& axis : a.axis_labels()) {
      check(dihedral::check_fusion(a, axis));
      check(dihedral::check_miyamoto(a, axis));
      std::size_t total = 0, ones = 0;
      for (const auto& s : dihedral::ad_spectrum(a, axis)) {
        total += s.basis.size();
        if (s.value == 1) ones = s.basis.size();
      }
      o.require(total == dihedral::dimension(t), n + " " + axis + ": eigenspaces do not span");
      o.require(ones == 1, n + " " + axis + ": 1-eigenspace is not 1-dimensional");
    }
    if (t == Type::T4A || t == Type::T4B || t == Type::T6A) check(dihedral::check_inclusion(a));
    o.require(qlin::is_psd(a.gram()), n + ": Gram matrix not PSD");
  }
  auto spot = [&](Type t, const char* x, const char* y, const Rational& want) {
    const auto a = dihedral::build(t);
    const Rational got = a.inner(a.e(x), a.e(y));
    o.require(got == want, std::string(dihedral::name(t)) + " (" + x + "," + y + ") = " + str(got) + ", want " +
                               str(want));
  };
  spot(Type::T3A, "u_rho", "u_rho", ratio(8, 5));
  spot(Type::T5A, "w_rho", "w_rho", ratio(125 * 7, 1 << 19));
  spot(Type::T6A, "a0", "a1", ratio(5, 256));
  spot(Type::T4A, "a0", "v_rho", ratio(3, 8));
}

// 2 -----------------------------------------------------------------------

void catalog_orders(Outcome& o) {
  const std::vector<std::size_t> want{64, 144, 160, 240, 660, 384, 960, 1440, 1152, 3840, 17496};
  const auto& names = classify::catalog_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto e = classify::catalog_entry(names[i]);
    const std::size_t tc = fp::presented_order(e.presentation());
    o.require(e.group.order() == want[i],
              names[i] + ": group order " + std::to_string(e.group.order()) + ", want " + std::to_string(want[i]));
    o.require(tc == want[i], names[i] + ": coset count " + std::to_string(tc) + ", want " + std::to_string(want[i]));
    o.require(fp::verify_presentation(e.presentation(), e.generators, e.group),
              names[i] + ": generators do not satisfy the presentation");
  }
}

// 3 -----------------------------------------------------------------------

using Row = std::pair<std::size_t, std::string>;

bool same_rows(std::vector<Row> got, std::vector<Row> want) {
  if (got.size() != want.size()) return false;
  // Match greedily up to type aliases.
  for (const auto& w : want) {
    auto it = std::find_if(got.begin(), got.end(), [&](const Row& g) {
      return g.first == w.first && classify::same_type(g.second, w.second);
    });
    if (it == got.end()) return false;
    got.erase(it);
  }
  return true;
}

void tables_reproduction(Outcome& o) {
  const auto& printed = classify::printed_rows();
  std::size_t word_failures = 0;
  for (const auto& name : classify::catalog_names()) {
    const auto e = classify::catalog_entry(name);
    const auto recs = classify::quotients(e);
    std::vector<Row> got, want;
    for (const auto& q : recs) got.emplace_back(q.normal_order, q.type);
    for (const auto& r : printed)
      if (r.parent == name) want.emplace_back(r.normal_order, r.quotient);
    o.require(same_rows(got, want), name + ": (|N|, G/N) multiset differs from the printed rows");

    // The printed words, as printed, must regenerate the subgroup that the
    // row is matched with.
    for (std::size_t r = 0; r < printed.size(); ++r) {
      if (printed[r].parent != name) continue;
      std::vector<Perm> xs;
      for (const auto& w : printed[r].words) xs.push_back(fp::evaluate_word(fp::Word::parse(w), e.table_generators));
      const auto n = perm::normal_closure(e.group, xs);
      const auto q = std::find_if(recs.begin(), recs.end(), [&](const auto& x) { return x.printed_row == r; });
      const bool hit = q != recs.end() && q->normal.order() == n.order() &&
                       std::all_of(n.elements().begin(), n.elements().end(),
                                   [&](const Perm& x) { return q->normal.contains(x); });
      if (!hit) {
        ++word_failures;
        std::string ws;
        for (const auto& w : printed[r].words) ws += (ws.empty() ? "" : ", ") + w;
        const bool taken = std::any_of(recs.begin(), recs.end(), [&](const auto& x) {
          return x.printed_row != r && x.normal.order() == n.order() &&
                 std::all_of(n.elements().begin(), n.elements().end(), [&](const Perm& y) { return x.normal.contains(y); });
        });
        o.require(false, name + ": printed words <" + ws + ">^G have order " + std::to_string(n.order()) +
                             (taken ? " and are another row's subgroup" : "") + ", row lists " +
                             std::to_string(printed[r].normal_order));
      }
    }
  }
  // Spot rows written out here rather than read from the transcription.
  auto rows_of = [](const char* g) {
    std::vector<Row> v;
    for (const auto& q : classify::quotients(classify::catalog_entry(g))) v.emplace_back(q.normal_order, q.type);
    return v;
  };
  o.require(rows_of("G3").empty(), "G3 has normal subgroups of index > 12");
  o.require(rows_of("G5").empty(), "G5 has normal subgroups of index > 12");
  o.require(same_rows(rows_of("G4"), {{2, "S5"}}), "G4 rows");
  o.require(same_rows(rows_of("G1"), {{4, "2xD8"}, {4, "2xD8"}, {4, "2xD8"}, {2, "2^4:2"}}), "G1 rows");
  o.require(rows_of("G11").size() == 23, "G11 does not have 23 rows");
  o.note = std::to_string(word_failures) + " printed X entries do not regenerate their row";
}

// 4 -----------------------------------------------------------------------

std::size_t order_with(int m, const fp::ExtraExponents& r = {}) { return fp::presented_order(fp::tp_presentation(m, 6, 6, r)); }

void presentation_collapses(Outcome& o) {
  const std::map<int, std::size_t> r4{{1, 12}, {2, 216}, {3, 108}, {4, 216}, {5, 12}};
  for (const auto& [r, want] : r4) {
    const fp::ExtraExponents ex{6, 6, 6, r, std::nullopt};
    const auto pres = fp::tp_presentation(6, 6, 6, ex);
    const auto table = fp::todd_coxeter(pres);
    o.require(table.size() == want, "r4 = " + std::to_string(r) + ": order " + std::to_string(table.size()));
    if (want == 12) {
      const auto act = fp::coset_action(table);
      o.require(perm::isomorphic(act.group, classify::reference("D12").group), "r4 = " + std::to_string(r) + ": not D12");
    }
  }
  const std::map<int, std::size_t> m66{{1, 4}, {2, 24}, {3, 108}};
  for (const auto& [m, want] : m66) {
    const std::size_t got = order_with(m);
    o.require(got == want, "m = " + std::to_string(m) + ": order " + std::to_string(got));
  }
  std::vector<PermGroup> variants;
  for (const auto& r : {fp::ExtraExponents{2, 6, 6}, fp::ExtraExponents{6, 2, 6}, fp::ExtraExponents{6, 6, 2}}) {
    const auto table = fp::todd_coxeter(fp::tp_presentation(6, 6, 6, r));
    o.require(table.size() == 72, "r1,r2,r3 variant has order " + std::to_string(table.size()));
    variants.push_back(fp::coset_action(table).group);
  }
  for (std::size_t i = 0; i < variants.size(); ++i)
    for (std::size_t j = i + 1; j < variants.size(); ++j)
      o.require(perm::isomorphic(variants[i], variants[j]), "variants " + std::to_string(i) + " and " +
                                                                std::to_string(j) + " are not isomorphic");
}

// 5 -----------------------------------------------------------------------

std::vector<axial::ObstructionCertificate> certificates;

bool has_klein(const axial::TConfig& cfg, const std::vector<Perm>& gens) {
  std::set<Perm> want = oracle::closure(gens, cfg.group().degree());
  want.erase(Perm::identity(cfg.group().degree()));
  for (const auto& w : axial::klein_search_all(cfg)) {
    std::set<Perm> s;
    for (std::size_t e : w.involutions) s.insert(cfg.group().element(e));
    if (s == want) return true;
  }
  return false;
}

void obstructions(Outcome& o) {
  std::size_t klein = 0, audit = 0;
  for (const auto& row : classify::excluded_rows()) {
    const auto cert = classify::obstruct_type(row.name);
    const auto v = axial::verify_certificate(cert);
    o.require(v.ok(), row.name + ": certificate fails: " + (v.ok() ? "" : v.problems.front()));
    certificates.push_back(cert);
    if (cert.kind == axial::ObstructionCertificate::Kind::Klein) {
      ++klein;
      continue;
    }
    ++audit;
    o.require(row.name == "2^4:S5", row.name + ": unexpected m1-audit certificate");
    // Recompute both sides of the first branch from the raw permutations.
    const auto& b = cert.branches.front();
    if (b.by != axial::Branch::Refutation::M1) {
      o.require(false, row.name + ": first branch is not an M1 refutation");
      continue;
    }
    oracle::AxisForm f;
    for (const auto& m : cert.members) f.s.insert(m.element);
    f.s.insert(b.extra.begin(), b.extra.end());
    const Rational left = f.inner(f.product(b.triple[0], b.triple[1]), b.triple[2]);
    const Rational right = f.inner(f.product(b.triple[1], b.triple[2]), b.triple[0]);
    o.require(left == ratio(-3, 256), "left side " + str(left) + ", want -3/256");
    o.require(left == b.left && right == b.right, "certificate rationals disagree with the oracle");
    o.require(left != right, "both sides agree");
    o.note = "(m1: -3/256 vs " + str(right) + ")";
  }
  o.require(klein == 9 && audit == 1,
            std::to_string(klein) + " klein and " + std::to_string(audit) + " m1-audit certificates");

  const auto s6 = PermGroup::generate(6, {p("(1,2)(3,4)(5,6)", 6), p("(5,6)", 6), p("(2,3)(4,5)", 6)});
  const auto c6 = axial::t_closure(s6, p("(1,2)(3,4)(5,6)", 6), p("(5,6)", 6), p("(2,3)(4,5)", 6));
  o.require(has_klein(c6, {p("(1,2)", 6), p("(3,4)", 6), p("(5,6)", 6)}), "S6: <(1,2),(3,4),(5,6)> not found");
  const Perm a = p("(1,2)(4,5)", 9), b = p("(4,5)(7,8)", 9), c = p("(1,3)(4,6)(7,9)", 9);
  const auto c27 = axial::t_closure(PermGroup::generate(9, {a, b, c}), a, b, c);
  o.require(has_klein(c27, {p("(1,3)", 9), p("(4,6)", 9), p("(7,9)", 9)}), "S3^3: <(1,3),(4,6),(7,9)> not found");
}

// 6 -----------------------------------------------------------------------

void klein_identity(Outcome& o) {
  const auto r = axial::klein_identity();
  o.require(r.coefficient == ratio(-1, 4), "coefficient " + str(r.coefficient));
  o.require(r.product_is_multiple, "product is not a multiple of the difference");
  o.require(r.quarter_eigenvectors == std::array<bool, 3>{true, true, true}, "not 1/4-eigenvectors");
  o.require(r.allowed == dihedral::fusion_rule(ratio(1, 4), ratio(1, 4)), "allowed set differs from the fusion table");
  o.require(r.allowed == std::vector<Rational>{1, 0}, "(1/4, 1/4) fusion is not {1, 0}");
  o.require(r.contradiction, "no contradiction");
}

// 7 -----------------------------------------------------------------------

void end_to_end(Outcome& o) {
  const auto rep = classify::classify_all();
  const std::vector<std::pair<std::string, std::size_t>> table6{
      {"2xS3xS3", 72},           {"S6", 720},
      {"(2^4:(S3xS3))x2", 1152}, {"2^4:S5", 1920},
      {"S3xS3xS3", 216},         {"2x(3^(1+2):2^2)", 216},
      {"(3:2):(3^(1+2):2^2)", 648},  {"(3^2:2):(3^(1+2):2^2)", 1944},
      {"(3^3:2):(3^(1+2):2^2)", 5832}, {"(3^4:2):(3^(1+2):2^2)", 17496}};
  std::vector<std::pair<std::string, std::size_t>> excluded;
  for (const auto& t : rep.types)
    if (t.excluded) excluded.emplace_back(t.name, t.order);
  o.require(excluded.size() == 10, std::to_string(excluded.size()) + " types excluded, want 10");
  for (const auto& [name, order] : table6) {
    const bool found = std::any_of(excluded.begin(), excluded.end(), [&](const auto& x) {
      return classify::same_type(x.first, name) && x.second == order;
    });
    o.require(found, name + " (order " + std::to_string(order) + ") not excluded");
  }
  o.require(rep.admissible.size() == 27, std::to_string(rep.admissible.size()) + " admissible types, want 27");
  for (const auto& t : rep.types) o.require(!t.sources.empty(), t.name + ": no provenance");
  const auto md = report::tables_markdown(rep);
  o.require(md.find("## Reconciliation") != std::string::npos && md.find("| " + std::to_string(rep.printed_total) + " |") !=
                                                                     std::string::npos,
            "reconciliation section missing");
  o.note = std::to_string(rep.types.size()) + " distinct types against 37 printed";
}

// 8 -----------------------------------------------------------------------

void properties(Outcome& o) {
  std::mt19937 rng(8);
  std::vector<PermGroup> groups{classify::catalog_entry("G1").group, classify::catalog_entry("G2").group,
                                classify::reference("S6").group};
  for (const auto& g : groups) {
    const std::string tag = "order " + std::to_string(g.order());
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int i = 0; i < 20; ++i) {
      const auto h = perm::subgroup(g, {g.element(pick(rng)), g.element(pick(rng))});
      o.require(g.order() % h.order() == 0, tag + ": Lagrange");
    }
    std::vector<int> hit(g.order());
    for (const auto& c : g.classes())
      for (std::size_t i : c) ++hit[i];
    o.require(std::all_of(hit.begin(), hit.end(), [](int x) { return x == 1; }), tag + ": classes do not partition");
    for (const auto& n : classify::normal_subgroups_index_gt(g, 1))
      o.require(perm::quotient(g, n).group.order() * n.order() == g.order(), tag + ": |G/N| |N| != |G|");
  }

  const auto e = classify::catalog_entry("G9");
  const auto cfg = axial::t_closure(e.group, e.generators[0], e.generators[1], e.generators[2]);
  std::set<Perm> t;
  for (std::size_t x : cfg.elements()) t.insert(e.group.element(x));
  bool closed = true;
  for (const auto& x : t) {
    for (const auto& g : e.generators) closed = closed && t.count(x.conj(g));
    for (const auto& y : t)
      if ((x * y).order() == 6) closed = closed && t.count((x * y).pow(3));
  }
  o.require(closed, "G9: T is not closed");
  const auto again = axial::t_closure(e.group, e.generators[0], e.generators[1], e.generators[2]);
  o.require(again.elements() == cfg.elements(), "G9: closure is not reproducible");

  std::uniform_int_distribution<std::size_t> pt(0, cfg.size() - 1), pg(0, e.group.order() - 1);
  for (int i = 0; i < 200; ++i) {
    const std::size_t x = cfg.elements()[pt(rng)], y = cfg.elements()[pt(rng)], h = pg(rng);
    const auto ty = axial::pair_type(cfg, x, y);
    o.require(ty == axial::pair_type(cfg, y, x), "pair_type not symmetric");
    o.require(ty == axial::pair_type(cfg, e.group.conj(x, h), e.group.conj(y, h)), "pair_type not invariant");
  }

  if (certificates.empty())
    for (const auto& row : classify::excluded_rows()) certificates.push_back(classify::obstruct_type(row.name));
  for (const auto& c : certificates) {
    const auto text = axial::certificate_to_json(c);
    const auto back = axial::certificate_from_json(text);
    o.require(axial::certificate_to_json(back) == text && axial::verify_certificate(back).ok(),
              c.group + ": certificate does not round-trip");
  }

  for (auto t : dihedral::all_types())
    o.require(oracle::norton_failures(dihedral::build(t), rng, 200) == 0,
              std::string(dihedral::name(t)) + ": Norton inequality fails");
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, 5, "dihedral suite", dihedral_suite);
  failed += run(2, 30, "catalog orders", catalog_orders);
  failed += run(3, 120, "normal-subgroup tables", tables_reproduction);
  failed += run(4, 10, "presentation collapses", presentation_collapses);
  failed += run(5, 120, "obstructions", obstructions);
  failed += run(6, 1, "2^3 identity", klein_identity);
  failed += run(7, 300, "end-to-end classification", end_to_end);
  failed += run(8, 600, "property suites", properties);
  std::cout << (8 - failed) << "/8 criteria pass\n";
  return failed;
}
