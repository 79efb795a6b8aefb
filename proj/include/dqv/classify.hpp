#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dqv/dynamic.hpp"
#include "dqv/geometry.hpp"
#include "dqv/report.hpp"
#include "dqv/upoly.hpp"

namespace dqv {

struct RunOptions {
  std::vector<int> rows;  // empty = all
  int samples = 3;        // rational samples per one-parameter row
  std::uint64_t seed = 0;
  int threads = 0;
  std::string data_dir;
};

// ---------------------------------------------------------------- constants

// nu = m mu + c
struct LineLocus {
  Alg m, c;
  bool contains(const SurfaceParams& p) const;
};

namespace constants {

// "C5+", "C5-", "C10+", "C10-" as printed.
LineLocus printed_line(const std::string& name);
// The four lines recomputed from a representative point of each orbit.
LineLocus derived_line(const std::string& name);
// nu as a polynomial in mu.
UPoly printed_c20();
UPoly printed_c30();

SurfaceParams mu5ab(int sign);
SurfaceParams mu20to10(int sign);
SurfaceParams mu30to10(int sign);
// Quadratics in mu whose roots give the remaining printed line exceptions.
UPoly mu5_quadratic(int sign);
UPoly mu10_quadratic(int sign);

UPoly octic20();
UPoly octic30();
// The degree-7 expressions giving the partner root.
Alg b20(const Alg& a);
Alg b30(const Alg& a);

// Explicit pair over Q(i, sqrt 95).
std::pair<Alg, Alg> a20_explicit(int sign);
// Pair quadratics, named "a20,1+", "a20,2-", "a30,1+", "a30,2-", "a30+", "a30-".
UPoly pair_quadratic(const std::string& name);
bool pair_is_type3(const std::string& name);

}  // namespace constants

// ------------------------------------------------------------- locus analysis

struct OrbitVerdict {
  std::string label;
  std::size_t size = 0;
  int min_rank = 3;
  bool odp = true;
  std::optional<PairData> pair;  // for the general shapes
};

struct LocusAnalysis {
  std::string tower;
  std::vector<OrbitVerdict> orbits;
  std::size_t size = 0;
  bool all_odp = true;
  DefectResult defect;
  bool tests_agree = true;     // both singularity tests on every point
  std::vector<std::string> chart4_zero;  // orbits whose chart-x0 4x4 determinant vanishes
  std::vector<std::string> sorted_labels() const;
};

// Full pipeline on one parameter pair built inside the split context. Hints
// are candidate roots tried before adjoining new ones.
struct BuiltParams {
  SurfaceParams params;
  std::vector<Alg> hints;
};
using ParamBuilder = std::function<BuiltParams(SplitContext&)>;
struct BranchAnalysis {
  LocusAnalysis analysis;
  std::vector<std::string> choices;
};
std::vector<BranchAnalysis> analyse(const ParamBuilder& build, int threads = 0, bool chart4 = false);
Json analysis_json(const LocusAnalysis& a);

// Points of every special shape and conjugate, tested directly; returns the
// labels of shapes singular at `params` that singular_locus missed (should be empty).
std::vector<std::string> shape_sweep(const SingularLocus& locus);

// ------------------------------------------------------------------- table

enum class RowMode { Point, Line, Curve };

struct ExceptionalParam {
  std::string name;
  ParamBuilder build;
};

struct RowSpec {
  int index = 0;
  int count = 0;
  std::vector<std::string> orbits;  // expected labels, sorted
  RowMode mode = RowMode::Point;
  std::string params_text, non_odp_text;
  std::optional<SurfaceParams> params;  // Point rows
  std::string line;                     // Line rows
  bool type3 = true;                    // Curve rows
  std::vector<ExceptionalParam> non_odp;
  int defect = 0;
  std::string pair;                     // printed pair of the general orbit, if any
};

const std::vector<RowSpec>& table1_rows();
// Conjugate partner under i -> -i (self for rows 3, 10, 11, 12, 19, 20).
int conjugate_row(int index);

// Non-ODP parameters on a line: the restricted Hessian determinant at a fixed
// orbit representative as a cubic in mu.
struct LineDeterminant {
  UPoly det;              // in mu
  std::vector<Alg> roots_found;  // printed values that are roots, with multiplicity
  UPoly unexplained;      // det divided by the linear factors of roots_found
};
LineDeterminant line_determinant(const std::string& line, const std::vector<Alg>& candidates);

CheckRecord table_row(const RowSpec& row, const RunOptions& opt);
Report table1(const RunOptions& opt);

// Conjugation equivariance of the +/- rows.
Report conjugation_check(const RunOptions& opt);

// ----------------------------------------------------------------- ledgers

Report constant_ledger_check();
Report pencil_geometry_check();
// det M = 5 lambda + 1 and the coordinate change of the quadric.
Report quadric_lemma_check();
// Invariant dimensions (characters and, where bundled, explicit matrices) and the
// singular-curve statement for I + I + W3.
Report invariants_check(const std::string& data_dir);

// -------------------------------------------------------------- determinantal

// mu(alpha), nu(alpha); throws DegenerateAlpha at 5 alpha + 1 = 0.
SurfaceParams artin_mumford_map(const Alg& alpha);
// Determinant of the 4x4 symmetric matrix with entries xi0 + delta_jk xi_jj.
MultiPoly determinantal_quartic();
Report artin_mumford_identity_check();
Report artin_mumford_sing_check(const Alg& lambda, int threads = 0);
// Same, starting from alpha (lambda = 5 alpha^2 + 2 alpha).
Report artin_mumford_alpha_check(const Alg& alpha, int threads = 0);
Report determinantal_stratum_check(const Alg& lambda);
// Random admissible rational lambdas (seeded) plus the two exceptional values.
Report artin_mumford_suite(const RunOptions& opt);

// --------------------------------------------------------------- irreducible

Report a6_identification(const std::string& data_dir);
Report theta_family_check(const Rational& theta);

Report verify_all(const RunOptions& opt);

}  // namespace dqv
