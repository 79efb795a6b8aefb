#include "doctest.h"
#include "dqv/fields.hpp"
#include "dqv/multipoly.hpp"
#include "dqv/polymatrix.hpp"
#include "dqv/upoly.hpp"

using namespace dqv;

TEST_CASE("univariate division, gcd and Bezout") {
  UPoly a = UPoly::from_rationals({-1, 0, 0, 1});  // t^3 - 1
  UPoly b = UPoly::from_rationals({-1, 0, 1});     // t^2 - 1
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(gcd(a, b) == UPoly::from_rationals({-1, 1}));
  Gcdex e = gcdex(a, b);
  CHECK(e.s * a + e.t * b == e.g);
  CHECK(exact_div(a, UPoly::from_rationals({-1, 1})) == UPoly::from_rationals({1, 1, 1}));
  CHECK_THROWS(exact_div(a, b));
}

TEST_CASE("squarefree part and derivative") {
  UPoly p = UPoly::from_rationals({1, 1}) * UPoly::from_rationals({1, 1}) * UPoly::from_rationals({-2, 1});
  CHECK(squarefree_part(p) == UPoly::from_rationals({1, 1}) * UPoly::from_rationals({-2, 1}));
  CHECK(UPoly::from_rationals({5, 3, 2}).derivative() == UPoly::from_rationals({3, 4}));
}

TEST_CASE("interpolation recovers a quartic from five nodes") {
  UPoly f = UPoly::from_rationals({Rational(-1, 4), -4, -27, -81, Rational(-405, 4)});
  std::vector<Alg> xs, ys;
  for (int t = 1; t <= 5; ++t) {
    xs.push_back(Alg(Rational(t, 7)));
    ys.push_back(f.eval(xs.back()));
  }
  CHECK(interpolate(xs, ys) == f);
}

TEST_CASE("polynomials over an extension") {
  TowerPtr k = fields::qi();
  Alg i = Alg::gen(k, "i");
  UPoly p(k, {Alg(k, Rational(1)), Alg(k, Rational(0)), Alg(k, Rational(1))});  // t^2 + 1
  CHECK(decide_zero(p.eval(i)));
  UPoly lin(k, {-i, Alg(k, Rational(1))});
  CHECK(exact_div(p, lin) == UPoly(k, {i, Alg(k, Rational(1))}));
}

TEST_CASE("multivariate arithmetic") {
  MultiPoly x = MultiPoly::var(3, 0), y = MultiPoly::var(3, 1), z = MultiPoly::var(3, 2);
  MultiPoly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.is_homogeneous());
  CHECK(p.total_degree() == 2);
  CHECK((x + y).pow(3).size() == 4);
  CHECK(p.partial(0) == Alg(2L) * x);
  CHECK(exact_divide(p, x - y) == x + y);
  CHECK_THROWS_AS(exact_divide(p, x - z), OracleDisagreement);
  // x -> y, y -> z, z -> x
  CHECK(p.compose({y, z, x}) == y * y - z * z);
  CHECK(p.evaluate({Alg(3L), Alg(2L), Alg(0L)}) == Alg(5L));
  CHECK(p.with_arity(5).arity() == 5);
}

TEST_CASE("Newton identity between power sums") {
  // e2 = (p1^2 - p2) / 2 and 3 e3 = e2 p1 - e1 p2 + p3 in four variables
  const int n = 4;
  MultiPoly p1 = power_sum(1, n), p2 = power_sum(2, n), p3 = power_sum(3, n);
  MultiPoly e2(n), e3(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      e2 += MultiPoly::var(n, a) * MultiPoly::var(n, b);
      for (int c = b + 1; c < n; ++c) e3 += MultiPoly::var(n, a) * MultiPoly::var(n, b) * MultiPoly::var(n, c);
    }
  CHECK(Alg(2L) * e2 == p1 * p1 - p2);
  CHECK(Alg(3L) * e3 == e2 * p1 - p1 * p2 + p3);
}

TEST_CASE("linear substitution and 2-jets") {
  MultiPoly x = MultiPoly::var(2, 0), y = MultiPoly::var(2, 1);
  MultiPoly f = x * x * y + y * y * y;
  // swap
  std::vector<std::vector<Alg>> swap{{Alg(0L), Alg(1L)}, {Alg(1L), Alg(0L)}};
  CHECK(substitute_linear(f, swap) == y * y * x + x * x * x);
  Jet2 j = jet2(f, {Alg(1L), Alg(2L)});
  CHECK(j.value == Alg(10L));
  CHECK(j.gradient[0] == Alg(4L));
  CHECK(j.gradient[1] == Alg(13L));
  CHECK(j.hessian[0][0] == Alg(4L));
  CHECK(j.hessian[0][1] == Alg(2L));
  CHECK(j.hessian[1][1] == Alg(12L));
}

TEST_CASE("symbolic determinants agree") {
  // generic 3x3 in nine variables: both routes give 6 terms
  PolyMatrix m(3, 3, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = MultiPoly::var(9, 3 * i + j);
  MultiPoly d = det(m);
  CHECK(d.size() == 6);
  CHECK(d == det_bareiss(m));
  std::vector<std::vector<Alg>> a{{Alg(2L), Alg(1L)}, {Alg(7L), Alg(4L)}};
  CHECK(det_alg(a) == Alg(1L));
}
