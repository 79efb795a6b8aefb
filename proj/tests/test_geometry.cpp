#include <algorithm>

#include "doctest.h"
#include "dqv/classify.hpp"
#include "dqv/fields.hpp"
#include "dqv/geometry.hpp"
#include "helpers.hpp"

using namespace dqv;

namespace {

SingularLocus locus_of(const SurfaceParams& p) {
  auto br = evaluate_with_splitting<SingularLocus>([&](SplitContext& ctx) { return singular_locus(p, ctx); });
  REQUIRE(br.size() == 1);
  return br[0].value;
}

const FoundOrbit& find_orbit(const SingularLocus& l, const std::string& label) {
  auto it = std::find_if(l.orbits.begin(), l.orbits.end(), [&](const FoundOrbit& o) { return o.label == label; });
  REQUIRE(it != l.orbits.end());
  return *it;
}

SurfaceParams rat(long a, long b, long c, long d) { return {Alg(Rational(a, b)), Alg(Rational(c, d))}; }

}  // namespace

TEST_CASE("special shapes give their parameters") {
  SurfaceParams p20 = shape_to_params({ShapeTag::S20Special, {}, {}});
  CHECK(p20.mu == Alg(Rational(-1, 3)));
  CHECK(p20.nu == Alg(Rational(-1, 6)));
  SurfaceParams p30 = shape_to_params({ShapeTag::S30Special, {}, {}});
  CHECK(p30.mu == Alg(Rational(-1, 6)));
  CHECK(p30.nu == Alg(Rational(-1, 48)));
}

TEST_CASE("the orbit at (-1/3, -1/6) is twenty ordinary double points") {
  SurfaceParams p = rat(-1, 3, -1, 6);
  SingularLocus l = locus_of(p);
  CHECK(l.size() == 20);
  CHECK(l.labels() == std::vector<std::string>{"S20"});
  SurfaceJets jets(p);
  for (const auto& P : l.points()) {
    SingularityReport r = odp_certify(P, jets);
    CHECK(r.hessian_rank == 3);
    CHECK(r.cross_checked);
  }
  CHECK(defect(l.points()).defect == 0);
}

TEST_CASE("the orbit at (-1/6, -1/48) has defect five") {
  SingularLocus l = locus_of(rat(-1, 6, -1, 48));
  CHECK(l.size() == 30);
  CHECK(odp_certify(l.points().front(), l.params).is_odp);
  DefectResult d = defect(l.points());
  CHECK(d.defect == 5);
  CHECK(d.rank == d.oracle_rank);
}

TEST_CASE("the five-point orbit is not an ODP at its special parameter") {
  SurfaceParams p = constants::mu5ab(1);
  SingularLocus l = locus_of(p);
  const FoundOrbit& o = find_orbit(l, "S5+");
  CHECK(o.points.size() == 5);
  SurfaceJets jets(p);
  CHECK(odp_certify(o.points.front(), jets).hessian_rank < 3);
}

TEST_CASE("defect of the empty set is zero") { CHECK(defect({}).defect == 0); }

TEST_CASE("duplicate points are rejected") {
  ProjPoint a({Alg(1L), Alg(2L), Alg(0L), Alg(0L), Alg(0L)});
  ProjPoint b({Alg(2L), Alg(4L), Alg(0L), Alg(0L), Alg(0L)});
  CHECK_THROWS_AS(defect({a, b}), DuplicatePoints);
}

TEST_CASE("defect is invariant under rescaling and coordinate permutation") {
  SingularLocus l = locus_of(rat(-1, 6, -1, 48));
  std::vector<ProjPoint> pts = l.points();
  int base = defect(pts).defect;
  std::mt19937_64 g(5);
  const auto& els = s5().elements();
  for (int trial = 0; trial < 3; ++trial) {
    const Perm& sigma = els[g() % els.size()];
    std::vector<ProjPoint> moved;
    for (const auto& P : pts) moved.push_back(P.permuted(sigma));
    CHECK(defect(moved).defect == base);
  }
  // ProjPoint normalises, so rescaling shows up in the raw evaluation matrix only
  AlgMatrix e = cubic_evaluation_matrix(pts);
  for (std::size_t r = 0; r < e.size(); ++r) {
    Alg c = Alg(static_cast<long>(r + 2));
    for (auto& x : e[r]) x *= c * c * c;
  }
  CHECK(static_cast<int>(pts.size()) - rank_serial(e) == base);
}

TEST_CASE("orbit sizes and stabilisers") {
  ProjPoint p = Shape{ShapeTag::S30Special, {}, {}}.point();
  Orbit o = orbit(p, s5());
  CHECK(o.size() == 30);
  CHECK(stabilizer_order(p, s5()) * o.size() == 120);
  CHECK(closed_under(o, s5()));
}

TEST_CASE("points off the surface are refused") {
  ProjPoint p({Alg(1L), Alg(0L), Alg(0L), Alg(0L), Alg(0L)});
  CHECK_THROWS_AS(is_singular_point(p, rat(-1, 3, -1, 6)), NotOnSurface);
}

TEST_CASE("sigma1 = 0 excludes a point from every singular locus") {
  std::mt19937_64 g(77);
  int tested = 0;
  for (int n = 0; n < 50; ++n) {
    // x0, x1, x2 random; x3 + x4 = s and x3^2 + x4^2 = m force sigma1 = sigma2 = 0
    std::vector<Rational> x{Rational(1), test::random_rational(g), test::random_rational(g)};
    Rational s = -(x[0] + x[1] + x[2]), m = -(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    Rational prod = (s * s - m) / 2, disc = s * s - 4 * prod;
    if (disc == 0) continue;
    TowerPtr k = fields::sqrt_ext(fields::qi(), "r", Alg(disc));
    Alg r = Alg::gen(k, "r");
    std::vector<Alg> c;
    for (const auto& v : x) c.push_back(Alg(k, v));
    c.push_back((Alg(k, s) + r) / Alg(2L));
    c.push_back((Alg(k, s) - r) / Alg(2L));
    ProjPoint P(c);
    CHECK(singular_param_locus(P).kind == ParamLocus::Empty);
    for (int t = 0; t < 20; ++t) {
      SurfaceParams prm{Alg(test::random_rational(g)), Alg(test::random_rational(g))};
      // on sigma1 = 0 the quartic is sigma4 alone, so P lies on S only when sigma4(P) = 0
      bool on = decide_zero(quartic_form(prm).evaluate(c));
      if (on) CHECK(!is_singular_point(P, prm));
    }
    ++tested;
  }
  CHECK(tested >= 40);
}

TEST_CASE("a sweep over special shapes finds nothing beyond the computed locus") {
  for (const auto& p : {rat(-1, 3, -1, 6), rat(-1, 6, -1, 48), rat(1, 7, 2, 9)}) {
    SingularLocus l = locus_of(p);
    CHECK(shape_sweep(l).empty());
    for (const auto& P : l.points()) {
      SingularTest t = singular_tests(P, l.params);
      CHECK(t.by_rank);
      CHECK(t.by_minors);
    }
  }
}
