#include "doctest.h"
#include "dqv/dynamic.hpp"
#include "dqv/expr.hpp"
#include "dqv/fields.hpp"
#include "dqv/upoly.hpp"
#include "helpers.hpp"

using namespace dqv;

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("gaussian rationals") {
  TowerPtr k = fields::qi();
  Alg i = Alg::gen(k, "i");
  CHECK(i * i == Alg(k, Rational(-1)));
  Alg z = Alg(k, Rational(3)) + Alg(4L) * i;
  Alg zi = z.inverse();
  CHECK((z * zi).is_one());
  CHECK(zi == parse_alg("3/25 - 4/25*i", k));
  CHECK(conjugate(z, "i") == Alg(k, Rational(3)) - Alg(4L) * i);
  CHECK_THROWS_AS(Alg(k).inverse(), ZeroElement);
}

TEST_CASE("towers: rendering, embedding and common towers") {
  TowerPtr k6 = fields::qi_s6();
  Alg s6 = Alg::gen(k6, "s6"), i = Alg::gen(fields::qi(), "i");
  CHECK(s6 * s6 == Alg(k6, Rational(6)));
  // mixed towers combine in the larger one
  Alg x = s6 + i;
  CHECK(same_tower(*x.tower(), *k6));
  CHECK(x.str() == "i + s6");
  CHECK((x * x).str() == "5 + 2*i*s6");
  // incomparable towers refuse to mix
  Alg w = Alg::gen(fields::q_w(), "w");
  CHECK_THROWS_AS(w + s6, TowerMismatch);
  CHECK(w * w + w + Alg(1L) == Alg(fields::q_w(), Rational(0)));
}

TEST_CASE("quadratic subfields through map_generators") {
  TowerPtr k23 = fields::qi_s2_s3();
  Alg s2 = Alg::gen(k23, "s2"), s3 = Alg::gen(k23, "s3");
  Alg y = fields::map_generators(parse_alg("1 + s6*i", fields::qi_s6()), k23,
                                 {{"i", Alg::gen(k23, "i")}, {"s6", s2 * s3}});
  CHECK(y == Alg(1L) + s2 * s3 * Alg::gen(k23, "i"));
  auto r = fields::find_sqrt(fields::qi_s6(), Rational(-6));
  REQUIRE(r.has_value());
  CHECK(*r * *r == Alg(fields::qi_s6(), Rational(-6)));
  CHECK(!fields::find_sqrt(fields::qi(), Rational(2)).has_value());
  CHECK(fields::is_rational_square(Rational(9, 4)));
  CHECK(!fields::is_rational_square(Rational(-1)));
}

TEST_CASE("extensions reject non-monic or linear relations") {
  TowerPtr q = FieldTower::rationals();
  CHECK_THROWS_AS(tower_extend(q, "t", {Alg(1L), Alg(0L), Alg(2L)}), NonMonicRelation);
  CHECK_THROWS(tower_extend(q, "t", {Alg(1L), Alg(1L)}));
}

TEST_CASE("a reducible relation splits into branches") {
  // t^2 - 1: t - 1 is a zero divisor, so the zero test of t - 1 splits
  auto br = evaluate_with_splitting<std::string>([](SplitContext& ctx) {
    TowerPtr t = ctx.adjoin(FieldTower::rationals(), "t", {Alg(-1L), Alg(0L), Alg(1L)});
    Alg x = Alg::gen(t, "t");
    return decide_zero(x - Alg(1L)) ? std::string("one") : std::string("minus one");
  });
  REQUIRE(br.size() == 2);
  CHECK(br[0].value != br[1].value);
  CHECK(br[0].choices.size() == 1);
}

TEST_CASE("an irreducible relation never splits") {
  auto br = evaluate_with_splitting<bool>([](SplitContext& ctx) {
    TowerPtr t = ctx.adjoin(FieldTower::rationals(), "t", {Alg(-2L), Alg(0L), Alg(0L), Alg(1L)});
    Alg x = Alg::gen(t, "t");
    return decide_zero(x * x - Alg(2L));
  });
  REQUIRE(br.size() == 1);
  CHECK(!br[0].value);
}

TEST_CASE("octic fields: generator inverses certify without a split") {
  for (const TowerPtr& k : {fields::q_a20(), fields::q_a30()}) {
    CHECK(k->degree() == 8);
    std::mt19937_64 g(11);
    for (int n = 0; n < 20; ++n) {
      Alg x = test::random_alg(g, k);
      if (x.is_zero()) continue;
      CHECK((x * x.inverse()).is_one());
    }
  }
}

TEST_CASE("expression parser") {
  TowerPtr k = fields::qi_s6();
  CHECK(parse_alg("-(6 + s6)/30", k) == Alg(k, Rational(-1, 5)) - Alg(Rational(1, 30)) * Alg::gen(k, "s6"));
  CHECK(parse_alg("(1+i)^4", k) == Alg(k, Rational(-4)));
  CHECK(parse_alg("i^-1", k) == -Alg::gen(k, "i"));
  CHECK_THROWS_AS(parse_alg("q + 1", k), ParseError);
  CHECK_THROWS_AS(parse_alg("(1 + i", k), ParseError);
}

TEST_CASE("cyclotomic fields") {
  TowerPtr k = fields::cyclotomic_field(5);
  Alg z = Alg::gen(k, "z");
  CHECK(z.pow(5).is_one());
  CHECK((Alg(1L) + z + z * z + z.pow(3) + z.pow(4)).is_zero());
  CHECK(cyclotomic(12) == UPoly::from_rationals({1, 0, -1, 0, 1}));
}
