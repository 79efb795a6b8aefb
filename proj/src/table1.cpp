#include <algorithm>
#include <map>
#include <random>

#include "dqv/classify.hpp"
#include "dqv/expr.hpp"
#include "dqv/fields.hpp"

namespace dqv {

std::vector<std::string> LocusAnalysis::sorted_labels() const {
  std::vector<std::string> out;
  for (const auto& o : orbits) out.push_back(o.label);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// The shape point itself when x0 != 0, else the first orbit point with x0 != 0.
ProjPoint chart0_point(const FoundOrbit& o) {
  ProjPoint s = o.shape.point();
  if (!decide_zero(s[0])) return s;
  for (const auto& p : o.points)
    if (!decide_zero(p[0])) return p;
  return o.points.front();
}

}  // namespace

std::vector<BranchAnalysis> analyse(const ParamBuilder& build, int threads, bool chart4) {
  auto branches = evaluate_with_splitting<LocusAnalysis>([&](SplitContext& ctx) {
    BuiltParams b = build(ctx);
    SingularLocus locus = singular_locus(b.params, ctx, b.hints);
    LocusAnalysis a;
    a.tower = locus.tower->describe();
    SurfaceJets jets(locus.params);
    for (const auto& o : locus.orbits) {
      OrbitVerdict v;
      v.label = o.label;
      v.size = o.points.size();
      bool first = true;
      for (const auto& p : o.points) {
        SingularTest t = singular_tests(p, locus.params);
        if (!t.by_rank) throw NotSingularPoint(o.label + " point " + p.str());
        SingularityReport r = odp_certify(p, jets, o.label, first);
        first = false;
        v.min_rank = std::min(v.min_rank, r.hessian_rank);
        v.odp = v.odp && r.is_odp;
      }
      if (o.label == "S20ab" || o.label == "S30ab") v.pair = PairData{o.shape.a + o.shape.b, o.shape.a * o.shape.b};
      if (chart4) {
        ProjPoint p = chart0_point(o);
        if (!decide_zero(p[0])) {
          if (decide_zero(chart4_hessian_det(p, jets))) a.chart4_zero.push_back(o.label);
        }
      }
      a.all_odp = a.all_odp && v.odp;
      a.orbits.push_back(std::move(v));
    }
    a.size = locus.size();
    a.defect = defect(locus.points(), threads);
    return a;
  });
  std::vector<BranchAnalysis> out;
  for (auto& b : branches) out.push_back({std::move(b.value), std::move(b.choices)});
  return out;
}

Json analysis_json(const LocusAnalysis& a) {
  Json orbits = Json::array();
  for (const auto& o : a.orbits) {
    Json j{{"label", o.label}, {"size", o.size}, {"min_hessian_rank", o.min_rank}, {"odp", o.odp}};
    if (o.pair) j["pair_sum"] = o.pair->s.str(), j["pair_product"] = o.pair->p.str();
    orbits.push_back(j);
  }
  Json j{{"tower", a.tower},
         {"orbits", orbits},
         {"sing", a.size},
         {"all_odp", a.all_odp},
         {"defect", a.defect.defect},
         {"rank", a.defect.rank},
         {"oracle_rank", a.defect.oracle_rank}};
  if (!a.chart4_zero.empty()) j["chart4_det_zero"] = a.chart4_zero;
  return j;
}

std::vector<std::string> shape_sweep(const SingularLocus& locus) {
  TowerPtr w = locus.tower;
  auto root = [&](long d, const std::string& name) {
    if (auto r = fields::find_sqrt(w, Rational(d))) return *r;
    w = fields::sqrt_ext(w, name, Alg(d));
    return Alg::gen(w, name);
  };
  Alg i = root(-1, "i_sweep");
  Alg s6 = root(6, "s6_sweep");
  i = i.embed(w);
  Alg one(w, Rational(1)), zero(w);
  Alg r = s6 * i * Alg(Rational(1, 2));
  struct Probe {
    std::string label;
    ProjPoint p;
  };
  std::vector<Probe> probes{{"S20", ProjPoint({one, zero, zero, zero, i})},
                            {"S30", ProjPoint({one, one, i, i, zero})},
                            {"S5", ProjPoint({one, one, one, one, Alg(2L) * i})},
                            {"S5", ProjPoint({one, one, one, one, Alg(-2L) * i})},
                            {"S10", ProjPoint({one, one, one, r, r})},
                            {"S10", ProjPoint({one, one, one, -r, -r})}};
  SurfaceParams params = locus.params.embed(w);
  std::vector<std::string> missing;
  for (const auto& pr : probes) {
    bool sing = false;
    try {
      sing = is_singular_point(pr.p, params);
    } catch (const NotOnSurface&) {
      sing = false;
    }
    if (!sing) continue;
    bool found = false;
    for (const auto& o : locus.orbits)
      for (const auto& q : o.points) found = found || q.embed(w) == pr.p;
    if (!found) missing.push_back(pr.label + " " + pr.p.str());
  }
  return missing;
}

// ------------------------------------------------------------------- rows

namespace {

Alg qi(const char* t) { return parse_alg(t, fields::qi()); }
Alg q6(const char* t) { return parse_alg(t, fields::qi_s6()); }

ParamBuilder fixed(SurfaceParams p) {
  return [p](SplitContext&) { return BuiltParams{p, {}}; };
}

// Root of a quadratic in mu adjoined through the context; nu from a line.
ParamBuilder quadratic_on_line(UPoly quad, std::string line, std::string name) {
  return [quad, line, name](SplitContext& ctx) {
    UPoly m = quad.monic();
    TowerPtr t = ctx.adjoin(m.ring(), name, m.coeffs());
    Alg mu = Alg::gen(t, name);
    LineLocus l = constants::printed_line(line);
    return BuiltParams{{mu, l.m.embed(t) * mu + l.c.embed(t)}, {}};
  };
}

ParamBuilder octic_pair(bool type3) {
  return [type3](SplitContext& ctx) {
    UPoly o = (type3 ? constants::octic20() : constants::octic30()).monic();
    TowerPtr t = ctx.adjoin(FieldTower::rationals(), "a", o.coeffs());
    Alg a = Alg::gen(t, "a");
    Alg b = type3 ? constants::b20(a) : constants::b30(a);
    SurfaceParams p = shape_to_params({type3 ? ShapeTag::Type3 : ShapeTag::Type4, a, b});
    return BuiltParams{p, {a, b}};
  };
}

std::string params_text(const SurfaceParams& p) { return "(" + p.mu.str() + ", " + p.nu.str() + ")"; }

RowSpec point_row(int idx, int count, std::vector<std::string> orbits, SurfaceParams p, int defect,
                  std::string pair = "") {
  RowSpec r;
  r.index = idx;
  r.count = count;
  std::sort(orbits.begin(), orbits.end());
  r.orbits = std::move(orbits);
  r.mode = RowMode::Point;
  r.params_text = params_text(p);
  r.non_odp_text = "none";
  r.params = std::move(p);
  r.defect = defect;
  r.pair = std::move(pair);
  return r;
}

RowSpec line_row(int idx, const std::string& line, const std::string& label, int sign, bool ten) {
  RowSpec r;
  r.index = idx;
  r.count = ten ? 10 : 5;
  r.orbits = {label};
  r.mode = RowMode::Line;
  r.line = line;
  LineLocus l = constants::printed_line(line);
  r.params_text = "nu = (" + l.m.str() + ")*mu + " + l.c.str();
  const std::string s = sign > 0 ? "+" : "-";
  if (!ten) {
    r.non_odp.push_back({"mu5,1/2" + s, quadratic_on_line(constants::mu5_quadratic(sign), line, "m5")});
    r.non_odp.push_back({"mu5ab" + s, fixed(constants::mu5ab(sign))});
  } else {
    r.non_odp.push_back({"mu10,1/2" + s, quadratic_on_line(constants::mu10_quadratic(sign), line, "m10")});
    r.non_odp.push_back({"mu20->10" + s, fixed(constants::mu20to10(sign))});
    r.non_odp.push_back({"mu30->10" + s, fixed(constants::mu30to10(sign))});
  }
  std::string t;
  for (const auto& e : r.non_odp) t += (t.empty() ? "" : ", ") + e.name;
  r.non_odp_text = t;
  return r;
}

RowSpec curve_row(int idx, bool type3) {
  RowSpec r;
  r.index = idx;
  r.count = type3 ? 20 : 30;
  r.orbits = {type3 ? "S20ab" : "S30ab"};
  r.mode = RowMode::Curve;
  r.type3 = type3;
  r.params_text = type3 ? "mu = -(a+b+1)/(3(a+b+3)), nu = ((a^3+b^3+3)(a+b+1) - 3ab(a+b+3))/(3(a+b+3)^4)"
                        : "mu = -(a+b+1)/(3(2a+2b+1)), nu = ((2a^3+2b^3+1)(a+b+1) - 3ab(2a+2b+1))/(3(2a+2b+1)^4)";
  r.non_odp.push_back({type3 ? "mu20,i" : "mu30,i", octic_pair(type3)});
  r.non_odp_text = type3 ? "(mu20,i, nu20,i), i=1..4" : "(mu30,i, nu30,i), i=1..4";
  r.defect = type3 ? 0 : 5;
  return r;
}

std::vector<RowSpec> build_rows() {
  std::vector<RowSpec> v;
  v.push_back(line_row(1, "C5+", "S5+", 1, false));
  v.push_back(line_row(2, "C5-", "S5-", -1, false));
  v.push_back(point_row(3, 10, {"S5+", "S5-"}, {qi("-1/5"), qi("-1/20")}, 0));
  v.push_back(line_row(4, "C10+", "S10+", 1, true));
  v.push_back(line_row(5, "C10-", "S10-", -1, true));
  v.push_back(point_row(6, 15, {"S5+", "S10+"}, {q6("-1/5 - (9 + s6)/120*i"), q6("(-16 + s6)/500 + (-9 - s6)/375*i")}, 0));
  v.push_back(point_row(7, 15, {"S5+", "S10-"}, {q6("-1/5 + (-9 + s6)/120*i"), q6("(-16 - s6)/500 + (-9 + s6)/375*i")}, 0));
  v.push_back(point_row(8, 15, {"S5-", "S10+"}, {q6("-1/5 + (9 - s6)/120*i"), q6("(-16 - s6)/500 + (9 - s6)/375*i")}, 0));
  v.push_back(point_row(9, 15, {"S5-", "S10-"}, {q6("-1/5 + (9 + s6)/120*i"), q6("(-16 + s6)/500 + (9 + s6)/375*i")}, 0));
  v.push_back(point_row(10, 20, {"S10+", "S10-"}, {qi("-1/5"), qi("-1/30")}, 0));
  v.push_back(point_row(11, 20, {"S20"}, {qi("-1/3"), qi("-1/6")}, 0));
  v.push_back(curve_row(12, true));
  v.push_back(point_row(13, 25, {"S5+", "S20ab"}, {qi("-1/5 + 1/5*i"), qi("-49/500 + 8/125*i")}, 0, "a20+"));
  v.push_back(point_row(14, 25, {"S5-", "S20ab"}, {qi("-1/5 - 1/5*i"), qi("-49/500 - 8/125*i")}, 0, "a20-"));
  v.push_back(point_row(15, 30, {"S10+", "S20ab"}, {q6("-1/5 + 1/15*s6*i"), q6("-11/250 + 8/375*s6*i")}, 0, "a20,1+"));
  v.push_back(point_row(16, 30, {"S10+", "S20ab"}, {q6("-1/5 + 1/45*s6*i"), q6("-83/2250 + 8/1125*s6*i")}, 0, "a20,2+"));
  v.push_back(point_row(17, 30, {"S10-", "S20ab"}, {q6("-1/5 - 1/15*s6*i"), q6("-11/250 - 8/375*s6*i")}, 0, "a20,1-"));
  v.push_back(point_row(18, 30, {"S10-", "S20ab"}, {q6("-1/5 - 1/45*s6*i"), q6("-83/2250 - 8/1125*s6*i")}, 0, "a20,2-"));
  v.push_back(point_row(19, 30, {"S30"}, {qi("-1/6"), qi("-1/48")}, 5));
  v.push_back(curve_row(20, false));
  v.push_back(point_row(21, 35, {"S5+", "S30ab"}, {qi("-2/15 + 1/15*i"), qi("-67/1500 + 14/375*i")}, 5, "a30,1+"));
  v.push_back(point_row(22, 35, {"S5+", "S30ab"}, {qi("-4/15 + 1/15*i"), qi("-131/1500 + 2/375*i")}, 5, "a30,2+"));
  v.push_back(point_row(23, 35, {"S5-", "S30ab"}, {qi("-2/15 - 1/15*i"), qi("-67/1500 - 14/375*i")}, 5, "a30,1-"));
  v.push_back(point_row(24, 35, {"S5-", "S30ab"}, {qi("-4/15 - 1/15*i"), qi("-131/1500 - 2/375*i")}, 5, "a30,2-"));
  v.push_back(point_row(25, 40, {"S10+", "S30ab"}, {q6("-1/5 - 1/30*s6*i"), q6("-7/250 - 4/375*s6*i")}, 10, "a30+"));
  v.push_back(point_row(26, 40, {"S10-", "S30ab"}, {q6("-1/5 + 1/30*s6*i"), q6("-7/250 + 4/375*s6*i")}, 10, "a30-"));
  return v;
}

}  // namespace

const std::vector<RowSpec>& table1_rows() {
  static const std::vector<RowSpec> rows = build_rows();
  return rows;
}

int conjugate_row(int index) {
  static const std::map<int, int> pairs{{1, 2},   {4, 5},   {6, 9},   {7, 8},   {13, 14},
                                        {15, 17}, {16, 18}, {21, 23}, {22, 24}, {25, 26}};
  for (const auto& [a, b] : pairs) {
    if (a == index) return b;
    if (b == index) return a;
  }
  return index;
}

// ------------------------------------------------------- line determinants

namespace {

ProjPoint line_rep(const std::string& line) {
  const TowerPtr k = line.rfind("C10", 0) == 0 ? fields::qi_s6() : fields::qi();
  Alg one(k, Rational(1));
  if (line == "C5+") return ProjPoint({one, one, one, one, parse_alg("2*i", k)});
  if (line == "C5-") return ProjPoint({one, one, one, one, parse_alg("-2*i", k)});
  if (line == "C10+") return ProjPoint({one, one, one, parse_alg("s6*i/2", k), parse_alg("s6*i/2", k)});
  if (line == "C10-") return ProjPoint({one, one, one, parse_alg("-s6*i/2", k), parse_alg("-s6*i/2", k)});
  throw ConfigError("unknown line " + line);
}

}  // namespace

LineDeterminant line_determinant(const std::string& line, const std::vector<Alg>& candidates) {
  ProjPoint rep = line_rep(line);
  LineLocus l = constants::printed_line(line);
  const TowerPtr k = common_tower(rep.tower(), l.m.tower());
  std::vector<Alg> xs, ys;
  for (long t = 0; t < 5; ++t) {
    Alg mu(k, Rational(t));
    SurfaceParams p{mu, l.m.embed(k) * mu + l.c.embed(k)};
    SurfaceJets jets(p);
    xs.push_back(mu);
    ys.push_back(det_alg(restricted_hessian_lagrange(rep, jets)));
  }
  LineDeterminant out;
  out.det = interpolate(xs, ys);
  if (out.det.degree() > 3) throw OracleDisagreement(line + ": restricted Hessian determinant has degree > 3 in mu");
  UPoly rest = out.det;
  for (const auto& c : candidates) {
    if (!is_ancestor(*c.tower(), *k) && !is_ancestor(*k, *c.tower())) continue;
    const TowerPtr kc = common_tower(k, c.tower());
    for (;;) {
      UPoly r = rest.embed(kc);
      if (r.degree() < 1 || !decide_zero(r.eval(c.embed(kc)))) break;
      UPoly lin(kc, {-c.embed(kc), Alg(kc, Rational(1))});
      rest = exact_div(r, lin);
      out.roots_found.push_back(c);
    }
  }
  out.unexplained = rest;
  return out;
}

// ------------------------------------------------------------- row checks

namespace {

struct Sampler {
  std::mt19937_64 gen;
  Sampler(std::uint64_t seed, int row) : gen(seed * 1000003ULL + static_cast<std::uint64_t>(row)) {}
  Rational next() {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    return Rational(num(gen)) / Rational(den(gen));
  }
};

bool on_other_loci(const SurfaceParams& p, const std::string& own) {
  for (const char* l : {"C5+", "C5-", "C10+", "C10-"})
    if (own != l && constants::printed_line(l).contains(p)) return true;
  if (own != "C20") {
    auto pr = type3_pair(p);
    if (pr) return true;
  }
  if (own != "C30") {
    auto pr = type4_pair(p);
    if (pr) return true;
  }
  return false;
}

std::optional<PairData> expected_pair(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "a20+" || name == "a20-") {
    auto [a, b] = constants::a20_explicit(name == "a20+" ? 1 : -1);
    return PairData{a + b, a * b};
  }
  UPoly q = constants::pair_quadratic(name);
  Alg inv = q.lc().inverse();
  return PairData{-q.coeff(1) * inv, q.coeff(0) * inv};
}

// Drops top levels on which x has no component.
Alg shrink(Alg x) {
  while (x.tower()->depth() > 0) {
    auto c = x.top_coefficients();
    if (!std::all_of(c.begin() + 1, c.end(), [](const Alg& y) { return y.is_zero(); })) break;
    x = c.front();
  }
  return x;
}

bool same(const Alg& x, const Alg& y) {
  Alg a = shrink(x), b = shrink(y);
  TowerPtr k = common_tower(a.tower(), b.tower());
  return decide_zero(a.embed(k) - b.embed(k));
}

struct Tally {
  bool ok = true;
  Json mismatches = Json::array();
  void fail(const std::string& field, const Json& expected, const Json& found) {
    ok = false;
    mismatches.push_back(Json{{"field", field}, {"expected", expected}, {"found", found}});
  }
};

// Runs the pipeline at one parameter pair and compares with the row's generic expectation.
Json check_generic(const RowSpec& row, const ParamBuilder& build, const RunOptions& opt, Tally& t,
                   const std::string& where) {
  auto br = analyse(build, opt.threads);
  Json out = Json::array();
  for (const auto& b : br) {
    const LocusAnalysis& a = b.analysis;
    Json j = analysis_json(a);
    if (!b.choices.empty()) j["branch"] = b.choices;
    if (a.sorted_labels() != row.orbits) t.fail(where + ": orbits", row.orbits, a.sorted_labels());
    if (static_cast<int>(a.size) != row.count) t.fail(where + ": |Sing|", row.count, a.size);
    if (!a.all_odp) t.fail(where + ": ODP", "all ordinary double points", j["orbits"]);
    if (a.defect.defect != row.defect) t.fail(where + ": defect", row.defect, a.defect.defect);
    if (auto ep = expected_pair(row.pair)) {
      bool matched = false;
      for (const auto& o : a.orbits)
        if (o.pair) matched = matched || (same(o.pair->s, ep->s) && same(o.pair->p, ep->p));
      if (!matched) t.fail(where + ": pair " + row.pair, ep->s.str() + " ; " + ep->p.str(), j["orbits"]);
      j["pair_matches"] = matched;
    }
    out.push_back(j);
  }
  return out;
}

}  // namespace

CheckRecord table_row(const RowSpec& row, const RunOptions& opt) {
  CheckRecord rec;
  rec.id = "table.row." + std::to_string(row.index);
  rec.anchor = "singularity classification table, row " + std::to_string(row.index);
  Tally t;
  Json payload;
  std::string orbit_text;
  for (const auto& o : row.orbits) orbit_text += (orbit_text.empty() ? "" : ", ") + o;
  payload["table_row"] = Json{{"index", row.index},
                              {"count", row.count},
                              {"orbits", orbit_text},
                              {"params", row.params_text},
                              {"non_odp", row.non_odp_text},
                              {"defect", row.defect},
                              {"class_group_rank_cited", 1 + row.defect}};
  try {
    if (row.mode == RowMode::Point) {
      payload["result"] = check_generic(row, fixed(*row.params), opt, t, "params");
    } else {
      Sampler sm(opt.seed, row.index);
      Json samples = Json::array();
      for (int k = 0; k < opt.samples; ++k) {
        SurfaceParams p;
        for (int tries = 0;; ++tries) {
          if (tries > 200) throw ConfigError("no admissible sample found");
          Rational x = sm.next();
          if (row.mode == RowMode::Line) {
            LineLocus l = constants::printed_line(row.line);
            Alg mu(l.m.tower(), x);
            p = {mu, l.m * mu + l.c};
            if (on_other_loci(p, row.line)) continue;
          } else {
            Alg s(FieldTower::rationals(), x);
            if (row.type3 ? decide_zero(s + Alg(3L)) : decide_zero(Alg(2L) * s + Alg(1L))) continue;
            Alg pp = row.type3 ? (s * s + Alg(3L)) / Alg(2L) : (Alg(2L) * s * s + Alg(1L)) / Alg(4L);
            p = row.type3 ? SurfaceParams{type3_mu(s), type3_nu(s, pp)} : SurfaceParams{type4_mu(s), type4_nu(s, pp)};
            if (on_other_loci(p, row.type3 ? "C20" : "C30")) continue;
          }
          break;
        }
        Json j = check_generic(row, fixed(p), opt, t, "sample " + params_text(p));
        samples.push_back(Json{{"params", params_text(p)}, {"result", j}});
      }
      payload["samples"] = samples;

      // printed exceptional parameters: expected to carry a worse-than-ODP point
      Json exc = Json::array();
      for (const auto& e : row.non_odp) {
        auto br = analyse(e.build, opt.threads, true);
        for (const auto& b : br) {
          Json j = analysis_json(b.analysis);
          j["name"] = e.name;
          if (!b.choices.empty()) j["branch"] = b.choices;
          if (b.analysis.all_odp)
            t.fail("non-ODP " + e.name, "a point worse than an ordinary double point", "all points are ODP");
          exc.push_back(j);
        }
      }
      payload["exceptional"] = exc;

      if (row.mode == RowMode::Line) {
        const int sign = row.line.back() == '+' ? 1 : -1;
        std::vector<Alg> cands;
        UPoly quad;
        if (row.line.rfind("C5", 0) == 0) {
          cands = {constants::mu5ab(sign).mu};
          quad = constants::mu5_quadratic(sign);
        } else {
          cands = {constants::mu20to10(sign).mu, constants::mu30to10(sign).mu};
          quad = constants::mu10_quadratic(sign);
        }
        LineDeterminant d = line_determinant(row.line, cands);
        Json roots = Json::array();
        for (const auto& r : d.roots_found) roots.push_back(r.str());
        UPoly g = gcd(d.det.embed(common_tower(d.det.ring(), quad.ring())), quad.embed(common_tower(d.det.ring(), quad.ring())));
        payload["hessian_determinant"] = Json{{"polynomial", d.det.str("mu")},
                                              {"printed_roots", roots},
                                              {"unexplained_factor", d.unexplained.str("mu")},
                                              {"gcd_with_printed_quadratic", g.str("mu")}};
        if (d.unexplained.degree() > 0)
          t.fail("non-ODP list completeness", "no further roots", d.unexplained.str("mu"));
      }
    }
  } catch (const ZeroDivisor&) {
    throw;
  } catch (const Error& e) {
    t.fail("exception", "none", std::string(e.what()));
  }
  payload["mismatches"] = t.mismatches;
  if (!t.ok) {
    const Json& m = t.mismatches.front();
    payload["message"] = "RowMismatch{row " + std::to_string(row.index) + ", " + m["field"].get<std::string>() +
                         ", expected " + m["expected"].dump() + ", found " + m["found"].dump() + "}";
  }
  rec.status = t.ok ? Status::Pass : Status::Fail;
  rec.payload = payload;
  return rec;
}

Report table1(const RunOptions& opt) {
  Report r;
  for (const auto& row : table1_rows()) {
    if (!opt.rows.empty() && std::find(opt.rows.begin(), opt.rows.end(), row.index) == opt.rows.end()) continue;
    r.add(table_row(row, opt));
  }
  return r;
}

// --------------------------------------------------------- conjugation

namespace {

std::string swap_sign(const std::string& label) {
  if (label.empty()) return label;
  if (label.back() == '+') return label.substr(0, label.size() - 1) + "-";
  if (label.back() == '-') return label.substr(0, label.size() - 1) + "+";
  return label;
}

Alg conj_i(const Alg& x) { return x.tower()->has("i") ? conjugate(x, "i") : x; }

bool same_params(const SurfaceParams& a, const SurfaceParams& b) { return same(a.mu, b.mu) && same(a.nu, b.nu); }

SurfaceParams conj_params(const SurfaceParams& p) { return {conj_i(p.mu), conj_i(p.nu)}; }

bool conj_poly(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return false;
  for (int k = 0; k <= a.degree(); ++k)
    if (!same(conj_i(a.coeff(k)), b.coeff(k))) return false;
  return true;
}

}  // namespace

Report conjugation_check(const RunOptions& opt) {
  Report rep;
  for (const auto& row : table1_rows()) {
    if (!opt.rows.empty() && std::find(opt.rows.begin(), opt.rows.end(), row.index) == opt.rows.end()) continue;
    int partner = conjugate_row(row.index);
    if (partner <= row.index && partner != row.index) continue;
    const RowSpec& other = table1_rows()[static_cast<std::size_t>(partner - 1)];
    CheckRecord c;
    c.id = "conjugation.row." + std::to_string(row.index);
    c.anchor = "complex conjugation maps row " + std::to_string(row.index) + " to row " + std::to_string(partner);
    bool ok = true;
    std::vector<std::string> sw;
    for (const auto& l : row.orbits) sw.push_back(swap_sign(l));
    std::sort(sw.begin(), sw.end());
    ok = ok && sw == other.orbits && row.count == other.count && row.defect == other.defect;
    if (row.mode == RowMode::Point) ok = ok && same_params(conj_params(*row.params), *other.params);
    if (row.mode == RowMode::Line) {
      LineLocus a = constants::printed_line(row.line), b = constants::printed_line(other.line);
      ok = ok && same(conj_i(a.m), b.m) && same(conj_i(a.c), b.c);
      const int s = row.line.back() == '+' ? 1 : -1;
      if (row.line.rfind("C5", 0) == 0) {
        ok = ok && same_params(conj_params(constants::mu5ab(s)), constants::mu5ab(-s));
        ok = ok && conj_poly(constants::mu5_quadratic(s), constants::mu5_quadratic(-s));
      } else {
        ok = ok && same_params(conj_params(constants::mu20to10(s)), constants::mu20to10(-s));
        ok = ok && same_params(conj_params(constants::mu30to10(s)), constants::mu30to10(-s));
        ok = ok && conj_poly(constants::mu10_quadratic(s), constants::mu10_quadratic(-s));
      }
      // the conjugate of the derived line is the derived partner line
      LineLocus da = constants::derived_line(row.line), db = constants::derived_line(other.line);
      ok = ok && same(conj_i(da.m), db.m) && same(conj_i(da.c), db.c);
    }
    if (!row.pair.empty() && row.pair != "a20+" && row.pair != "a20-")
      ok = ok && conj_poly(constants::pair_quadratic(row.pair), constants::pair_quadratic(other.pair));
    if (row.pair == "a20+") {
      auto [a, b] = constants::a20_explicit(1);
      auto [a2, b2] = constants::a20_explicit(-1);
      // as unordered pairs
      ok = ok && ((same(conj_i(a), a2) && same(conj_i(b), b2)) || (same(conj_i(a), b2) && same(conj_i(b), a2)));
    }
    c.status = ok ? Status::Pass : Status::Fail;
    if (!ok) c.payload["message"] = "row " + std::to_string(partner) + " is not the conjugate of row " + std::to_string(row.index);
    rep.add(c);
  }
  return rep;
}

}  // namespace dqv
