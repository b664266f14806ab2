#include "doctest.h"

#include <random>

#include "support.hpp"
#include "tpg/classify.hpp"

using namespace tpg::classify;
using tpg::oracle::p;
using tpg::perm::Perm;
using tpg::perm::PermGroup;

namespace {

std::set<Perm> as_set(const PermGroup& g) { return {g.elements().begin(), g.elements().end()}; }

void check_lattice(const PermGroup& g) {
  const auto all = tpg::oracle::normal_subgroups(as_set(g));
  for (std::size_t bound : {0, 2, 4}) {
    std::set<std::set<Perm>> want;
    for (const auto& n : all)
      if (n.size() > 1 && g.order() / n.size() > bound) want.insert(n);
    std::set<std::set<Perm>> got;
    std::size_t last = g.order() + 1;
    for (const auto& n : normal_subgroups_index_gt(g, bound)) {
      CHECK(n.order() <= last);
      last = n.order();
      CHECK(tpg::perm::is_normal(g, n));
      got.insert(as_set(n));
    }
    CHECK(got == want);
  }
}

}  // namespace

TEST_CASE("normal subgroup lattice agrees with brute force") {
  check_lattice(PermGroup::generate(4, {p("(1,2)", 4), p("(1,2,3,4)", 4)}));
  check_lattice(PermGroup::generate(6, {p("(1,2)", 6), p("(1,2,3)", 6), p("(4,5)", 6), p("(4,5,6)", 6)}));
  check_lattice(PermGroup::generate(6, {p("(1,2,3,4)", 6), p("(1,3)", 6), p("(5,6)", 6)}));
  check_lattice(PermGroup::generate(6, {p("(1,2)", 6), p("(3,4)", 6), p("(5,6)", 6)}));
}

TEST_CASE("triangle-point test agrees with the exhaustive one") {
  // 2 x D16: products of reflections reach order 8.
  const auto g = PermGroup::generate(10, {p("(1,2,3,4,5,6,7,8)", 10), p("(2,8)(3,7)(4,6)", 10), p("(9,10)", 10)});
  std::vector<Perm> inv;
  for (const auto& x : g.elements())
    if (x.order() == 2) inv.push_back(x);
  std::mt19937 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, inv.size() - 1);
  std::size_t yes = 0, tried = 0;
  while (tried < 150) {
    const Perm &a = inv[pick(rng)], &b = inv[pick(rng)], &c = inv[pick(rng)];
    if ((a * b).order() != 2) continue;
    ++tried;
    const auto h = PermGroup::generate(10, {a, b, c});
    const bool want = tpg::oracle::triangle_point({a, b, c}, 10);
    CHECK(is_triangle_point(h, a, b, c) == want);
    yes += want;
  }
  CHECK(yes > 0);
  CHECK(yes < tried);
}

TEST_CASE("small triangle-point groups") {
  std::set<std::string> names;
  for (const auto& s : small_tp_groups()) {
    names.insert(s.name);
    CHECK(s.group.order() <= 12);
    CHECK(tpg::oracle::triangle_point({s.triple[0], s.triple[1], s.triple[2]}, s.group.degree()));
  }
  CHECK(names == std::set<std::string>{"2^2", "D8", "2^3", "D12"});
}

TEST_CASE("references are identified by name") {
  for (const char* n : {"S4", "A5", "S3xS3", "2xD8", "2^4:2", "S6", "2^4:S5", "2^4:D12"}) {
    CAPTURE(n);
    CHECK(same_type(identify(reference(n).group), n));
  }
  CHECK(same_type("D12", "2xS3"));
  CHECK(same_type("2^2", "D4"));
  CHECK_FALSE(same_type("S4", "2xD8"));
  CHECK_THROWS_AS(reference("S7"), std::out_of_range);
  CHECK(identify(PermGroup::generate(7, {p("(1,2,3,4,5,6,7)", 7)})).rfind("?order=7", 0) == 0);
}

TEST_CASE("compact quotients have the right order and images") {
  const auto e = catalog_entry("G1");
  for (const auto& n : normal_subgroups_index_gt(e.group, 12)) {
    const auto q = compact_quotient(e.group, n, e.generators);
    CHECK(q.group.order() * n.order() == e.group.order());
    REQUIRE(q.tracked.size() == 3);
    CHECK(PermGroup::generate(q.group.degree(), q.tracked).order() == q.group.order());
  }
}

TEST_CASE("catalog entries") {
  const auto g3 = catalog_entry("G3");
  CHECK(g3.group.order() == 160);
  CHECK(g3.coset_count == 160);
  CHECK(normal_subgroups_index_gt(g3.group, 12).empty());
  CHECK(tpg::fp::verify_presentation(g3.presentation(), g3.generators, g3.group));
  CHECK_THROWS_AS(catalog_entry("G12"), std::out_of_range);
  CHECK(catalog_names().size() == 11);

  std::size_t g11_rows = 0;
  for (const auto& r : printed_rows()) g11_rows += r.parent == "G11";
  CHECK(g11_rows == 23);
}

TEST_CASE("quotient records") {
  for (const char* name : {"G1", "G4", "G6"}) {
    const auto e = catalog_entry(name);
    const auto rec = quotients(e);
    CAPTURE(name);
    for (const auto& q : rec) {
      CHECK(q.normal_order * q.quotient_order == e.group.order());
      CHECK(q.quotient.order() == q.quotient_order);
      CHECK(tpg::perm::is_normal(e.group, q.normal));
      CHECK(q.triangle_point == is_triangle_point(q.quotient, q.images[0], q.images[1], q.images[2]));
      // The words regenerate the subgroup.
      std::vector<Perm> xs;
      for (const auto& w : q.words)
        xs.push_back(tpg::fp::evaluate_word(tpg::fp::Word::parse(w), e.table_generators));
      CHECK(as_set(tpg::perm::normal_closure(e.group, xs)) == as_set(q.normal));
    }
  }
  const auto g4 = quotients(catalog_entry("G4"));
  REQUIRE(g4.size() == 1);
  CHECK(g4[0].normal_order == 2);
  CHECK(same_type(g4[0].type, "S5"));
}

TEST_CASE("row checks flag only genuine differences") {
  const auto e = catalog_entry("G1");
  auto rec = quotients(e);
  CHECK(row_discrepancies("G1", rec).empty());
  rec.pop_back();
  const auto ds = row_discrepancies("G1", rec);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].kind == "row-unmatched");
}
