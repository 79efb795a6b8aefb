#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqv/dynamic.hpp"
#include "dqv/linalg.hpp"
#include "dqv/multipoly.hpp"
#include "dqv/projpoint.hpp"

namespace dqv {

// The surface S_{mu,nu} = { sigma2 = 0, sigma4 + 4 mu sigma3 sigma1 + nu sigma1^4 = 0 } in P^4.
struct SurfaceParams {
  Alg mu, nu;
  TowerPtr tower() const { return common_tower(mu.tower(), nu.tower()); }
  SurfaceParams embed(const TowerPtr& t) const { return {mu.embed(t), nu.embed(t)}; }
  std::string str() const { return "(" + mu.str() + ", " + nu.str() + ")"; }
};

const PermGroup& s5();

MultiPoly quadric_form();
MultiPoly quartic_form(const SurfaceParams& p);
std::pair<MultiPoly, MultiPoly> surface_equations(const SurfaceParams& p);

// Cached first and second partials of both equations.
class SurfaceJets {
 public:
  explicit SurfaceJets(const SurfaceParams& p);
  const SurfaceParams& params() const { return p_; }
  const MultiPoly& q() const { return q_; }
  const MultiPoly& f() const { return f_; }
  std::vector<Alg> grad_q(const std::vector<Alg>& x) const;
  std::vector<Alg> grad_f(const std::vector<Alg>& x) const;
  AlgMatrix hess_q(const std::vector<Alg>& x) const;
  AlgMatrix hess_f(const std::vector<Alg>& x) const;

 private:
  SurfaceParams p_;
  MultiPoly q_, f_;
  std::vector<MultiPoly> dq_, df_;
  std::vector<std::vector<MultiPoly>> ddq_, ddf_;
};

enum class ShapeTag { S30Special, S20Special, Type3, Type4 };

struct Shape {
  ShapeTag tag = ShapeTag::Type3;
  Alg a, b;
  // (1:1:i:i:0), (1:0:0:0:i), (1:1:1:a:b), (1:a:a:b:b)
  ProjPoint point() const;
  // a^2+b^2+3 = 0 for Type3, 2a^2+2b^2+1 = 0 for Type4; true for the special shapes.
  bool conic_holds() const;
  Shape swapped() const { return {tag, b, a}; }
};

// The unique (mu, nu) for which the shape's point is singular.
SurfaceParams shape_to_params(const Shape& s);

// Closed forms in s = a + b, p = ab. mu_from_sum returns nullopt on the excluded line.
struct PairData {
  Alg s, p;
};
std::optional<PairData> type3_pair(const SurfaceParams& params);
std::optional<PairData> type4_pair(const SurfaceParams& params);
Alg type3_nu(const Alg& s, const Alg& p);
Alg type4_nu(const Alg& s, const Alg& p);
Alg type3_mu(const Alg& s);
Alg type4_mu(const Alg& s);

struct SingularTest {
  bool by_rank = false;
  bool by_minors = false;
};
// Runs both tests; throws OracleDisagreement if they differ and NotOnSurface when P is off S.
SingularTest singular_tests(const ProjPoint& P, const SurfaceParams& params);
bool is_singular_point(const ProjPoint& P, const SurfaceParams& params);

// Conditions on (mu, nu) making a fixed point singular; affine in (mu, nu).
struct ParamLocus {
  enum Kind { Empty, Point, Line, Plane } kind = Empty;
  Alg m, c;  // Line: nu = m mu + c.  Point: (m, c).
};
ParamLocus singular_param_locus(const ProjPoint& P);

struct FoundOrbit {
  std::string label;  // S5+, S5-, S10+, S10-, S20, S30, S20ab, S30ab
  Shape shape;
  std::vector<ProjPoint> points;
};

struct SingularLocus {
  TowerPtr tower;
  SurfaceParams params;
  std::vector<FoundOrbit> orbits;
  std::size_t size() const;
  std::vector<ProjPoint> points() const;
  std::vector<std::string> labels() const;
};

// Complete singular locus via the shape reduction. New tower levels are taken
// from ctx; root_hints are tried before adjoining a root of t^2 - s t + p.
SingularLocus singular_locus(const SurfaceParams& params, SplitContext& ctx,
                             const std::vector<Alg>& root_hints = {});

struct SingularityReport {
  ProjPoint point;
  std::string orbit;
  int hessian_rank = 0;
  bool is_odp = false;
  int chart = 0;    // coordinate set to 1
  int solved = 0;   // coordinate eliminated through the quadric
  bool cross_checked = false;  // both Hessian routes computed and compared
};

// cross_check: also run the explicit second-order substitution and compare.
SingularityReport odp_certify(const ProjPoint& P, const SurfaceJets& jets, const std::string& orbit = "",
                              bool cross_check = true);
SingularityReport odp_certify(const ProjPoint& P, const SurfaceParams& params, const std::string& orbit = "");
// 3x3 restricted Hessian by each route.
AlgMatrix restricted_hessian_lagrange(const ProjPoint& P, const SurfaceJets& jets, int* chart = nullptr,
                                      int* solved = nullptr);
AlgMatrix restricted_hessian_jet(const ProjPoint& P, const SurfaceJets& jets);

// Determinant of the 4x4 Hessian of F - kappa q in the chart x0 = 1, without
// restricting to the quadric. Chart dependent; reported as a diagnostic only.
Alg chart4_hessian_det(const ProjPoint& P, const SurfaceJets& jets);

struct DefectResult {
  int points = 0;
  int rank = 0;         // Bareiss
  int oracle_rank = 0;  // certificate
  int defect = 0;
};
AlgMatrix cubic_evaluation_matrix(const std::vector<ProjPoint>& pts);
DefectResult defect(const std::vector<ProjPoint>& pts, int threads = 0);

}  // namespace dqv
