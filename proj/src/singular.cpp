#include <map>

#include "dqv/fields.hpp"
#include "dqv/geometry.hpp"

namespace dqv {

namespace {

struct Conjugate {
  int sign_i = 1, sign_s6 = 1;
  Alg m, c;
  ProjPoint rep;
};

struct SpecialData {
  std::string base;  // S5, S10, S20, S30
  bool needs_s6 = false;
  ParamLocus::Kind kind = ParamLocus::Empty;
  std::vector<Conjugate> conj;  // distinct Galois images of the locus
  MultiPoly line_norm;          // product of nu - m mu - c over conj, rational coefficients
  std::vector<Alg> point_mu, point_nu;
};

Alg apply_signs(const Alg& x, const TowerPtr& f, int si, int s6) {
  std::map<std::string, Alg> img{{"i", Alg(si) * Alg::gen(f, "i")}};
  if (f->has("s6")) img["s6"] = Alg(s6) * Alg::gen(f, "s6");
  return fields::map_generators(x.embed(f), f, img);
}

ProjPoint apply_signs(const ProjPoint& p, const TowerPtr& f, int si, int s6) {
  std::vector<Alg> y;
  for (const auto& v : p.coords()) y.push_back(apply_signs(v, f, si, s6));
  return ProjPoint(std::move(y));
}

SpecialData make_special(const std::string& base, const ProjPoint& rep, bool needs_s6) {
  SpecialData d;
  d.base = base;
  d.needs_s6 = needs_s6;
  const TowerPtr f = needs_s6 ? fields::qi_s6() : fields::qi();
  ParamLocus l = singular_param_locus(rep.embed(f));
  d.kind = l.kind;
  if (l.kind != ParamLocus::Line && l.kind != ParamLocus::Point)
    throw DimensionMismatch(base + ": unexpected parameter locus");
  for (int si : {1, -1})
    for (int s6 : needs_s6 ? std::vector<int>{1, -1} : std::vector<int>{1}) {
      Conjugate c{si, s6, apply_signs(l.m, f, si, s6), apply_signs(l.c, f, si, s6), apply_signs(rep.embed(f), f, si, s6)};
      bool dup = false;
      for (const auto& o : d.conj) dup = dup || (o.m == c.m && o.c == c.c);
      if (!dup) d.conj.push_back(std::move(c));
    }
  if (l.kind == ParamLocus::Line) {
    MultiPoly n = MultiPoly::constant(2, Alg(f, Rational(1)));
    for (const auto& c : d.conj) n = n * (MultiPoly::var(2, 1, f) - c.m * MultiPoly::var(2, 0, f) - MultiPoly::constant(2, c.c));
    MultiPoly nq(2, FieldTower::rationals());
    for (const auto& [mono, coeff] : n.terms()) {
      if (!coeff.is_rational()) throw DimensionMismatch(base + ": norm of the parameter line is not rational");
      nq += MultiPoly::monomial(2, mono, Alg(FieldTower::rationals(), coeff.rational()));
    }
    d.line_norm = nq;
  } else {
    for (const auto& c : d.conj) {
      d.point_mu.push_back(c.m);
      d.point_nu.push_back(c.c);
    }
  }
  return d;
}

const std::vector<SpecialData>& specials() {
  static const std::vector<SpecialData> v = [] {
    const TowerPtr k = fields::qi();
    const TowerPtr k6 = fields::qi_s6();
    Alg i = Alg::gen(k, "i"), o(k, Rational(1)), z(k);
    Alg r = Alg::gen(k6, "s6") * Alg::gen(k6, "i") * Alg(Rational(1, 2));
    Alg o6(k6, Rational(1));
    std::vector<SpecialData> out;
    out.push_back(make_special("S20", ProjPoint({o, z, z, z, i}), false));
    out.push_back(make_special("S30", ProjPoint({o, o, i, i, z}), false));
    out.push_back(make_special("S5", ProjPoint({o, o, o, o, Alg(2L) * i}), false));
    out.push_back(make_special("S10", ProjPoint({o6, o6, o6, r, r}), true));
    return out;
  }();
  return v;
}

// Evaluates a polynomial with rational coefficients at (mu, nu).
Alg eval_rational(const MultiPoly& p, const Alg& mu, const Alg& nu) {
  const TowerPtr k = common_tower(mu.tower(), nu.tower());
  return p.embed(k).evaluate({mu.embed(k), nu.embed(k)});
}

Alg product_of_differences(const Alg& x, const std::vector<Alg>& roots) {
  // the product has rational coefficients as a polynomial in x; expand it first
  std::vector<Alg> poly{Alg(roots.empty() ? FieldTower::rationals() : roots[0].tower(), Rational(1))};
  for (const auto& r : roots) {
    std::vector<Alg> next(poly.size() + 1, Alg(r.tower()));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= r * poly[j];
    }
    poly = std::move(next);
  }
  Alg xp(x.tower(), Rational(1));
  Alg out(x.tower());
  for (const auto& c : poly) {
    if (!c.is_rational()) throw DimensionMismatch("norm polynomial is not rational");
    out += Alg(x.tower(), c.rational()) * xp;
    xp *= x;
  }
  return out;
}

Alg need_sqrt(TowerPtr& w, const std::string& name, long d, SplitContext& ctx) {
  if (auto r = fields::find_sqrt(w, Rational(d))) return *r;
  w = ctx.adjoin(w, name, {Alg(w, Rational(-d)), Alg(w), Alg(w, Rational(1))});
  return Alg::gen(w, name);
}

std::vector<ProjPoint> orbit_points(const ProjPoint& p) { return orbit(p, s5()).points(); }

}  // namespace

std::size_t SingularLocus::size() const {
  std::size_t n = 0;
  for (const auto& o : orbits) n += o.points.size();
  return n;
}

std::vector<ProjPoint> SingularLocus::points() const {
  std::vector<ProjPoint> out;
  for (const auto& o : orbits) out.insert(out.end(), o.points.begin(), o.points.end());
  return out;
}

std::vector<std::string> SingularLocus::labels() const {
  std::vector<std::string> out;
  for (const auto& o : orbits) out.push_back(o.label);
  return out;
}

SingularLocus singular_locus(const SurfaceParams& params, SplitContext& ctx, const std::vector<Alg>& root_hints) {
  TowerPtr w = params.tower();
  SurfaceParams pk = params.embed(w);
  std::vector<FoundOrbit> found;
  std::optional<Alg> iw, s6w;

  // finite shapes and the degenerate specialisations, via their parameter loci
  for (const auto& sp : specials()) {
    bool possible = false;
    if (sp.kind == ParamLocus::Line) {
      possible = decide_zero(eval_rational(sp.line_norm, pk.mu, pk.nu));
    } else {
      possible = decide_zero(product_of_differences(pk.mu, sp.point_mu)) &&
                 decide_zero(product_of_differences(pk.nu, sp.point_nu));
    }
    if (!possible) continue;
    if (!iw) iw = need_sqrt(w, "i", -1, ctx);
    if (sp.needs_s6 && !s6w) s6w = need_sqrt(w, "s6", 6, ctx);
    std::map<std::string, Alg> img{{"i", iw->embed(w)}};
    if (s6w) img["s6"] = s6w->embed(w);
    for (const auto& c : sp.conj) {
      Alg m = fields::map_generators(c.m, w, img), cc = fields::map_generators(c.c, w, img);
      bool here = sp.kind == ParamLocus::Line ? decide_zero(pk.nu.embed(w) - m * pk.mu.embed(w) - cc)
                                              : decide_zero(pk.mu.embed(w) - m) && decide_zero(pk.nu.embed(w) - cc);
      if (!here) continue;
      std::vector<Alg> y;
      for (const auto& v : c.rep.coords()) y.push_back(fields::map_generators(v, w, img));
      FoundOrbit o;
      o.label = sp.base;
      if (sp.base == "S5") o.label += c.sign_i > 0 ? "+" : "-";
      if (sp.base == "S10") o.label += c.sign_i * c.sign_s6 > 0 ? "+" : "-";
      if (sp.base == "S20") o.shape.tag = ShapeTag::S20Special;
      if (sp.base == "S30") o.shape.tag = ShapeTag::S30Special;
      if (sp.base == "S5") o.shape = {ShapeTag::Type3, Alg(w, Rational(1)), y[4]};
      if (sp.base == "S10") o.shape = {ShapeTag::Type3, y[3], y[4]};
      o.points = orbit_points(ProjPoint(std::move(y)));
      found.push_back(std::move(o));
    }
  }

  // general shapes: (1:1:1:a:b) and (1:a:a:b:b)
  auto general = [&](bool type3) {
    SurfaceParams pw = pk.embed(w);
    auto pair = type3 ? type3_pair(pw) : type4_pair(pw);
    if (!pair) return;
    const Alg& s = pair->s;
    const Alg& p = pair->p;
    if (decide_zero(s * s - Alg(4L) * p)) return;       // a = b
    if (decide_zero(Alg(1L) - s + p)) return;           // a = 1 or b = 1
    std::optional<Alg> t;
    for (const auto& h : root_hints) {
      if (!is_ancestor(*h.tower(), *w)) continue;
      Alg hw = h.embed(w);
      if (decide_zero(hw * hw - s * hw + p)) {
        t = hw;
        break;
      }
    }
    if (!t) {
      w = ctx.adjoin(w, type3 ? "t3" : "t4", {p.embed(w), -s.embed(w), Alg(w, Rational(1))});
      t = Alg::gen(w, type3 ? "t3" : "t4");
    }
    Alg sw = s.embed(w);
    FoundOrbit o;
    o.label = type3 ? "S20ab" : "S30ab";
    o.shape = {type3 ? ShapeTag::Type3 : ShapeTag::Type4, *t, sw - *t};
    o.points = orbit_points(o.shape.point());
    found.push_back(std::move(o));
  };
  general(true);
  general(false);

  SingularLocus out;
  out.tower = w;
  out.params = pk.embed(w);
  for (auto& o : found) {
    for (auto& p : o.points) p = p.embed(w);
    o.shape.a = o.shape.a.embed(w);
    o.shape.b = o.shape.b.embed(w);
    out.orbits.push_back(std::move(o));
  }
  return out;
}

}  // namespace dqv
