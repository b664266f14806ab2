#include "doctest.h"

#include <random>

#include "support.hpp"
#include "tpg/dihedral.hpp"

using namespace tpg::dihedral;
using tpg::qlin::ratio;

namespace {

Vector combo(const DihedralAlgebra& a, std::initializer_list<std::pair<const char*, Rational>> terms) {
  Vector v(a.dim());
  for (const auto& [label, c] : terms) v += c * a.e(label);
  return v;
}

Vector prod(const DihedralAlgebra& a, const char* x, const char* y) { return a.product(a.e(x), a.e(y)); }
Rational form(const DihedralAlgebra& a, const char* x, const char* y) { return a.inner(a.e(x), a.e(y)); }

}  // namespace

TEST_CASE("type names and dimensions") {
  const std::map<std::string, std::size_t> dims{{"1A", 1}, {"2A", 3}, {"2B", 2}, {"3A", 4}, {"3C", 3},
                                                {"4A", 5}, {"4B", 5}, {"5A", 6}, {"6A", 8}};
  for (Type t : all_types()) {
    const std::string n(name(t));
    CHECK(dimension(t) == dims.at(n));
    CHECK(parse_type(n) == t);
    CHECK(build(t).dim() == dims.at(n));
  }
  CHECK(parse_type("6a") == Type::T6A);
  CHECK_THROWS_AS(parse_type("7A"), std::invalid_argument);
}

TEST_CASE("fusion rules") {
  const Rational q = ratio(1, 4), e = ratio(1, 32);
  using V = std::vector<Rational>;
  CHECK(fusion_rule(1, 1) == V{1});
  CHECK(fusion_rule(1, 0).empty());
  CHECK(fusion_rule(0, 0) == V{0});
  CHECK(fusion_rule(0, q) == V{q});
  CHECK(fusion_rule(q, q) == V{1, 0});
  CHECK(fusion_rule(q, e) == V{e});
  CHECK(fusion_rule(e, e) == V{1, 0, q});
}

TEST_CASE("printed products and forms") {
  const auto a2 = build(Type::T2A);
  CHECK(prod(a2, "a0", "a1") == combo(a2, {{"a0", ratio(1, 8)}, {"a1", ratio(1, 8)}, {"a_rho", ratio(-1, 8)}}));
  CHECK(form(a2, "a1", "a_rho") == ratio(1, 8));

  const auto b2 = build(Type::T2B);
  CHECK(prod(b2, "a0", "a1").is_zero());

  const auto a3 = build(Type::T3A);
  CHECK(prod(a3, "a0", "a1") == combo(a3, {{"a0", ratio(2, 32)},
                                           {"a1", ratio(2, 32)},
                                           {"a-1", ratio(1, 32)},
                                           {"u_rho", ratio(-135, 2048)}}));
  CHECK(prod(a3, "u_rho", "u_rho") == a3.e("u_rho"));
  CHECK(form(a3, "a0", "a1") == ratio(13, 256));
  CHECK(form(a3, "a0", "u_rho") == ratio(1, 4));
  CHECK(form(a3, "u_rho", "u_rho") == ratio(8, 5));

  const auto c3 = build(Type::T3C);
  CHECK(form(c3, "a0", "a1") == ratio(1, 64));

  const auto a4 = build(Type::T4A);
  CHECK(prod(a4, "a0", "a2").is_zero());
  CHECK(prod(a4, "v_rho", "v_rho") == a4.e("v_rho"));
  CHECK(form(a4, "a0", "a1") == ratio(1, 32));
  CHECK(form(a4, "a0", "v_rho") == ratio(3, 8));
  CHECK(form(a4, "v_rho", "v_rho") == 2);

  const auto b4 = build(Type::T4B);
  CHECK(prod(b4, "a0", "a1") == combo(b4, {{"a0", ratio(1, 64)},
                                           {"a1", ratio(1, 64)},
                                           {"a-1", ratio(-1, 64)},
                                           {"a2", ratio(-1, 64)},
                                           {"a_rho2", ratio(1, 64)}}));
  CHECK(prod(b4, "a0", "a2") == combo(b4, {{"a0", ratio(1, 8)}, {"a2", ratio(1, 8)}, {"a_rho2", ratio(-1, 8)}}));
  CHECK(form(b4, "a0", "a1") == ratio(1, 64));
  CHECK(form(b4, "a0", "a2") == ratio(1, 8));

  const auto a5 = build(Type::T5A);
  CHECK(form(a5, "a0", "a1") == ratio(3, 128));
  CHECK(form(a5, "a0", "w_rho") == 0);
  CHECK(form(a5, "w_rho", "w_rho") == ratio(875, 524288));
  CHECK(prod(a5, "w_rho", "w_rho") ==
        combo(a5, {{"a-2", ratio(175, 524288)}, {"a-1", ratio(175, 524288)}, {"a0", ratio(175, 524288)},
                   {"a1", ratio(175, 524288)}, {"a2", ratio(175, 524288)}}));

  const auto a6 = build(Type::T6A);
  CHECK(form(a6, "a0", "a1") == ratio(5, 256));
  CHECK(form(a6, "a0", "a2") == ratio(13, 256));
  CHECK(form(a6, "a0", "a3") == ratio(1, 8));
  CHECK(form(a6, "a_rho3", "u_rho2") == 0);
  CHECK(prod(a6, "a_rho3", "u_rho2").is_zero());
  CHECK(prod(a6, "a0", "a3") == combo(a6, {{"a0", ratio(1, 8)}, {"a3", ratio(1, 8)}, {"a_rho3", ratio(-1, 8)}}));
}

TEST_CASE("every axiom check passes and the forms are PSD") {
  for (Type t : all_types()) {
    const auto a = build(t);
    CAPTURE(name(t));
    for (const auto& r : verify_all(a)) {
      CAPTURE(r.check);
      CHECK(r.violations.empty());
    }
    CHECK(a.gram().is_symmetric());
    CHECK(tpg::qlin::is_psd(a.gram()));
    CHECK(tpg::oracle::psd_by_minors(a.gram()));
    for (const auto& axis : a.axis_labels()) {
      const auto spec = ad_spectrum(a, axis);
      std::size_t total = 0;
      for (const auto& s : spec) {
        total += s.basis.size();
        // Each eigenvector really is one.
        for (const auto& v : s.basis) CHECK(a.product(a.e(axis), v) == s.value * v);
        if (s.value == 1) CHECK(s.basis.size() == 1);
      }
      CHECK(total == a.dim());
    }
  }
}

TEST_CASE("form is associative on random vectors and the Norton inequality holds") {
  std::mt19937 rng(2024);
  for (Type t : all_types()) {
    const auto a = build(t);
    CAPTURE(name(t));
    CHECK(tpg::oracle::norton_failures(a, rng, 200) == 0);
    for (int i = 0; i < 20; ++i) {
      const auto u = tpg::oracle::random_vector(rng, a.dim());
      const auto v = tpg::oracle::random_vector(rng, a.dim());
      const auto w = tpg::oracle::random_vector(rng, a.dim());
      CHECK(a.inner(a.product(u, v), w) == a.inner(u, a.product(v, w)));
      CHECK(a.product(u, v) == a.product(v, u));
    }
  }
}

TEST_CASE("inclusions between types") {
  CHECK(check_inclusion(build(Type::T4A)).ok());
  CHECK(check_inclusion(build(Type::T4B)).ok());
  CHECK(check_inclusion(build(Type::T6A)).ok());
  CHECK_THROWS_AS(check_inclusion(build(Type::T3A)), std::invalid_argument);
}

TEST_CASE("Miyamoto involution is an automorphism of order two") {
  for (Type t : all_types()) {
    const auto a = build(t);
    for (const auto& axis : a.axis_labels()) {
      const auto tau = miyamoto_tau(a, axis);
      CHECK(tau * tau == tpg::qlin::Matrix::identity(a.dim()));
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
          CHECK(tau * a.table(i, j) == a.product(tau.column(i), tau.column(j)));
    }
  }
}

TEST_CASE("labels and JSON") {
  const auto a = build(Type::T2A);
  CHECK_THROWS_AS(a.index_of("a7"), std::out_of_range);
  CHECK(format(a, prod(a, "a0", "a1")) == "1/8*a0 + 1/8*a1 - 1/8*a_rho");
  const auto text = to_json(a);
  CHECK(text.find("\"a_rho\"") != std::string::npos);
  CHECK(to_json(build(Type::T2A)) == text);
}

TEST_CASE("a sign flip on w_rho under the swap is inconsistent") {
  CHECK_NOTHROW(build(Type::T5A, {{{"w_rho", 1}}}));
  CHECK_THROWS_AS(build(Type::T5A, {{{"w_rho", -1}}}), ConstructionError);
}
