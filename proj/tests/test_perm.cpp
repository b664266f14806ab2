#include "doctest.h"

#include <random>
#include <set>

#include "support.hpp"
#include "tpg/perm_group.hpp"

using namespace tpg::perm;
using tpg::oracle::p;

namespace {

PermGroup s_n(std::size_t n) {
  std::string cyc = "(";
  for (std::size_t i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? "," : ")");
  return PermGroup::generate(n, {p("(1,2)", n), p(cyc.c_str(), n)});
}

std::set<Perm> as_set(const PermGroup& g) { return {g.elements().begin(), g.elements().end()}; }

}  // namespace

TEST_CASE("cycle notation round-trips and composes left to right") {
  const Perm x = Perm::parse("(1,2,3)(5,6)", 6);
  CHECK(x.str() == "(1,2,3)(5,6)");
  CHECK(Perm::parse("()", 4).is_identity());
  CHECK(Perm::parse("(2,7)").degree() == 7);
  CHECK_THROWS_AS(Perm::parse("(1,1)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("(1,5)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("(1,2", 3), std::invalid_argument);

  const Perm a = p("(1,2)", 3), b = p("(2,3)", 3);
  // 1 -> 2 under a, then 2 -> 3 under b.
  CHECK((a * b)(0) == 2);
  CHECK((a * b).str() == "(1,3,2)");
  CHECK(a.conj(b) == b.inverse() * a * b);
  CHECK(a.conj(b).str() == "(1,3)");
}

TEST_CASE("order is the lcm of cycle lengths") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<Point> img(9);
    std::iota(img.begin(), img.end(), Point{0});
    std::shuffle(img.begin(), img.end(), rng);
    const Perm x(img);
    CHECK(x.order() == tpg::oracle::cycle_lcm(x));
    CHECK(x.pow(static_cast<long>(x.order())).is_identity());
    CHECK(x * x.inverse() == Perm::identity(9));
  }
}

TEST_CASE("closure, classes, center and derived subgroup of small groups") {
  const auto s4 = s_n(4);
  CHECK(s4.order() == 24);
  CHECK(as_set(s4) == tpg::oracle::closure(s4.generators(), 4));
  CHECK(s4.element(0).is_identity());

  std::multiset<std::size_t> sizes;
  for (const auto& c : s4.classes()) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 3, 6, 6, 8});

  const auto a5 = PermGroup::generate(5, {p("(1,2,3)", 5), p("(1,2,3,4,5)", 5)});
  CHECK(a5.order() == 60);
  CHECK(a5.classes().size() == 5);
  CHECK(center(a5).order() == 1);
  CHECK(derived_subgroup(a5).order() == 60);
  CHECK(derived_subgroup(s4).order() == 12);

  const auto d8 = PermGroup::generate(4, {p("(1,2,3,4)", 4), p("(1,3)", 4)});
  CHECK(center(d8).order() == 2);
  CHECK(center(d8).contains(p("(1,3)(2,4)", 4)));

  CHECK_THROWS_AS(PermGroup::generate(6, {p("(1,2)", 6), p("(1,2,3,4,5,6)", 6)}, 100), CapacityError);
}

TEST_CASE("class partition and Lagrange on random subgroups") {
  const auto s6 = s_n(6);
  std::set<std::size_t> seen;
  for (const auto& c : s6.classes())
    for (std::size_t i : c) {
      CHECK(seen.insert(i).second);
      CHECK(s6.class_index()[i] == s6.class_index()[c.front()]);
    }
  CHECK(seen.size() == s6.order());

  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, s6.order() - 1);
  for (int i = 0; i < 50; ++i) {
    const auto h = subgroup(s6, {s6.element(pick(rng)), s6.element(pick(rng))});
    CHECK(s6.order() % h.order() == 0);
    CHECK(is_subgroup_of(h, s6));
    CHECK(as_set(h) == tpg::oracle::closure(h.generators(), 6));
  }
}

TEST_CASE("normal closure and quotients") {
  const auto s4 = s_n(4);
  const std::vector<Perm> x{p("(1,2)(3,4)", 4)};
  const auto v4 = normal_closure(s4, x);
  CHECK(v4.order() == 4);
  CHECK(is_normal(s4, v4));
  CHECK_FALSE(is_normal(s4, subgroup(s4, {p("(1,2)", 4)})));

  const std::vector<Perm> tracked{p("(1,2)", 4), p("(1,2,3)", 4)};
  const auto q = quotient(s4, v4, tracked);
  CHECK(q.group.order() * v4.order() == s4.order());
  CHECK(q.tracked.size() == 2);
  CHECK(q.tracked[0].order() == 2);
  CHECK(q.tracked[1].order() == 3);
  CHECK(isomorphic(q.group, s_n(3)));
  CHECK_THROWS_AS(quotient(s4, subgroup(s4, {p("(1,2)", 4)})), std::invalid_argument);

  // Every normal subgroup of S6 gives |N| |G/N| = |G|.
  const auto s6 = s_n(6);
  for (const char* gen : {"(1,2,3)", "(1,2)"}) {
    const std::vector<Perm> g{p(gen, 6)};
    const auto n = normal_closure(s6, g);
    CHECK(quotient(s6, n).group.order() * n.order() == s6.order());
  }
}

TEST_CASE("isomorphism test separates groups of equal order") {
  const auto d8 = PermGroup::generate(4, {p("(1,2,3,4)", 4), p("(1,3)", 4)});
  const auto q8 = PermGroup::generate(8, {p("(1,2,5,6)(3,4,7,8)", 8), p("(1,3,5,7)(2,8,6,4)", 8)});
  const auto c4c2 = PermGroup::generate(6, {p("(1,2,3,4)", 6), p("(5,6)", 6)});
  CHECK(q8.order() == 8);
  CHECK_FALSE(isomorphic(d8, q8));
  CHECK_FALSE(isomorphic(d8, c4c2));
  CHECK_FALSE(isomorphic(q8, c4c2));

  // D12 and 2 x S3 are the same group in two guises.
  const auto d12 = PermGroup::generate(6, {p("(1,2,3,4,5,6)", 6), p("(1,6)(2,5)(3,4)", 6)});
  const auto s3x2 = PermGroup::generate(5, {p("(1,2)", 5), p("(1,2,3)", 5), p("(4,5)", 5)});
  const auto iso = find_isomorphism(d12, s3x2);
  REQUIRE(iso);
  CHECK(fingerprint(d12) == fingerprint(s3x2));

  // The map on generators extends to a homomorphism: check every relation
  // of length two between the generator images.
  const auto& src = iso->source_generators;
  const auto& dst = iso->target_images;
  for (std::size_t i = 0; i < src.size(); ++i) {
    CHECK(src[i].order() == dst[i].order());
    for (std::size_t j = 0; j < src.size(); ++j) CHECK((src[i] * src[j]).order() == (dst[i] * dst[j]).order());
  }
}

TEST_CASE("elementary abelian detection") {
  CHECK(is_elementary_abelian_2(PermGroup::generate(6, {p("(1,2)", 6), p("(3,4)", 6), p("(5,6)", 6)})));
  CHECK_FALSE(is_elementary_abelian_2(PermGroup::generate(4, {p("(1,2,3,4)", 4)})));
}
