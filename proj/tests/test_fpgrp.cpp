#include "doctest.h"

#include "support.hpp"
#include "tpg/coset_enum.hpp"
#include "tpg/word.hpp"

using namespace tpg::fp;
using tpg::oracle::p;

TEST_CASE("word grammar") {
  CHECK(Word::parse("a*b^c").str() == "acbc");
  CHECK(Word::parse("ab.b^c").str() == "abcbc");
  CHECK(Word::parse("(ac)^3").str() == "acacac");
  CHECK(Word::parse("c^{ab}").str() == "bacab");
  CHECK(Word::parse("((ac)^3)^b").str() == "bacacacb");
  CHECK(Word::parse("a^-1").str() == "a");
  CHECK(Word::parse("(abc)^-1").str() == "cba");
  CHECK(Word::parse("1").empty());
  CHECK(Word::parse("abba").reduced().empty());
  CHECK(Word::parse("ab").inverse().str() == "ba");
  CHECK_THROWS_AS(Word::parse("a*d"), ParseError);
  CHECK_THROWS_AS(Word::parse("(ab"), ParseError);
  CHECK_THROWS_AS(Word::parse("a^"), ParseError);
}

TEST_CASE("words evaluate left to right") {
  const std::array<tpg::perm::Perm, 3> img{p("(1,2)", 4), p("(3,4)", 4), p("(2,3)", 4)};
  CHECK(evaluate_word(Word::parse("ac"), img) == img[0] * img[2]);
  CHECK(evaluate_word(Word::parse("a^c"), img) == img[0].conj(img[2]));
  CHECK(evaluate_word(Word::parse("1"), img).is_identity());
}

TEST_CASE("presentation text round-trips") {
  const auto pres = tp_presentation(3, 3, 4);
  const auto again = Presentation::parse(pres.str());
  CHECK(again.str() == pres.str());
  CHECK(Presentation::parse("gens a b c; # comment\nrel (ab)^2; rel a*b^c;").relators().size() == 2);
  CHECK_THROWS_AS(Presentation::parse("rel (ab)^2;"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("gens x y z; rel x;"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("gens a b c; foo;"), ParseError);
  CHECK_THROWS_AS(tp_presentation(7, 3, 3), std::invalid_argument);
}

// With a and b commuting, <a, b, c | (ac)^m, (bc)^n> is a Coxeter group
// whose order is known in closed form, and the extra relator (abc)^p holds
// automatically when p is a multiple of the order of the Coxeter element.
TEST_CASE("coset enumeration of Coxeter-type presentations") {
  CHECK(presented_order(tp_presentation(3, 3, 4)) == 24);  // A3
  CHECK(presented_order(tp_presentation(3, 4, 6)) == 48);  // B3, Coxeter number 6
  CHECK(presented_order(tp_presentation(2, 3, 6)) == 12);  // 2 x S3
  CHECK(presented_order(tp_presentation(2, 2, 2)) == 8);   // 2^3
  CHECK(presented_order(tp_presentation(1, 1, 2)) == 2);   // a = b = c
  CHECK(presented_order(tp_presentation(1, 1, 1)) == 1);   // and abc = a = 1

  const auto s4 = tp_presentation(3, 3, 4);
  const auto t = todd_coxeter(s4, {Word::parse("a"), Word::parse("b")});
  CHECK(t.size() == 6);
  CHECK(t.satisfies(s4, {Word::parse("a"), Word::parse("b")}));
  CHECK_THROWS_AS(todd_coxeter(tp_presentation(3, 4, 6), {}, 20), CosetCapacityError);
}

TEST_CASE("coset tables are standardized and give a faithful action") {
  const auto pres = tp_presentation(3, 3, 4);
  const auto t1 = todd_coxeter(pres);
  const auto t2 = todd_coxeter(Presentation::parse(pres.str()));
  CHECK(t1.rows == t2.rows);

  const auto act = coset_action(t1);
  CHECK(act.group.order() == 24);
  CHECK(verify_presentation(pres, act.images, act.group));

  const std::array<tpg::perm::Perm, 3> s4{p("(1,2)", 4), p("(3,4)", 4), p("(2,3)", 4)};
  const auto g = tpg::perm::PermGroup::generate(4, {s4[0], s4[1], s4[2]});
  CHECK(verify_presentation(pres, s4, g));
  // (ab)^2 fails for a = (1,2), b = (2,3).
  const std::array<tpg::perm::Perm, 3> bad{p("(1,2)", 4), p("(2,3)", 4), p("(3,4)", 4)};
  CHECK_FALSE(verify_presentation(pres, bad, g));
}
