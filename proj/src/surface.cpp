#include "dqv/geometry.hpp"

#include "dqv/fields.hpp"

namespace dqv {

namespace {

constexpr int kN = 5;

const MultiPoly& sigma(int k) {
  static const std::vector<MultiPoly> s = [] {
    std::vector<MultiPoly> v{MultiPoly(kN)};
    for (int j = 1; j <= 4; ++j) v.push_back(power_sum(j, kN));
    return v;
  }();
  return s[static_cast<std::size_t>(k)];
}

// sigma3 * sigma1 and sigma1^4, shared by every quartic
const MultiPoly& s3s1() {
  static const MultiPoly p = sigma(3) * sigma(1);
  return p;
}
const MultiPoly& s1_4() {
  static const MultiPoly p = sigma(1).pow(4);
  return p;
}

std::vector<Alg> eval_all(const std::vector<MultiPoly>& ps, const std::vector<Alg>& x) {
  std::vector<Alg> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.evaluate(x));
  return out;
}

AlgMatrix eval_all(const std::vector<std::vector<MultiPoly>>& ps, const std::vector<Alg>& x) {
  AlgMatrix out(ps.size(), std::vector<Alg>(ps.size()));
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a; b < ps.size(); ++b) out[a][b] = out[b][a] = ps[a][b].evaluate(x);
  return out;
}

bool distinct3(const Alg& a, const Alg& b) { return !decide_zero(a - b) && !decide_zero(a - Alg(1L)) && !decide_zero(b - Alg(1L)); }

}  // namespace

const PermGroup& s5() {
  static const PermGroup g = PermGroup::symmetric(5);
  return g;
}

MultiPoly quadric_form() { return sigma(2); }

MultiPoly quartic_form(const SurfaceParams& p) {
  TowerPtr k = p.tower();
  MultiPoly f = sigma(4).embed(k);
  f += (Alg(4L) * p.mu).embed(k) * s3s1().embed(k);
  f += p.nu.embed(k) * s1_4().embed(k);
  return f;
}

std::pair<MultiPoly, MultiPoly> surface_equations(const SurfaceParams& p) { return {quadric_form(), quartic_form(p)}; }

SurfaceJets::SurfaceJets(const SurfaceParams& p) : p_(p), q_(quadric_form()), f_(quartic_form(p)) {
  for (int a = 0; a < kN; ++a) {
    dq_.push_back(q_.partial(a));
    df_.push_back(f_.partial(a));
  }
  ddq_.assign(kN, std::vector<MultiPoly>(kN));
  ddf_.assign(kN, std::vector<MultiPoly>(kN));
  for (int a = 0; a < kN; ++a)
    for (int b = 0; b < kN; ++b) {
      ddq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = dq_[static_cast<std::size_t>(a)].partial(b);
      ddf_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = df_[static_cast<std::size_t>(a)].partial(b);
    }
}

std::vector<Alg> SurfaceJets::grad_q(const std::vector<Alg>& x) const { return eval_all(dq_, x); }
std::vector<Alg> SurfaceJets::grad_f(const std::vector<Alg>& x) const { return eval_all(df_, x); }
AlgMatrix SurfaceJets::hess_q(const std::vector<Alg>& x) const { return eval_all(ddq_, x); }
AlgMatrix SurfaceJets::hess_f(const std::vector<Alg>& x) const { return eval_all(ddf_, x); }

ProjPoint Shape::point() const {
  switch (tag) {
    case ShapeTag::S30Special: {
      TowerPtr k = common_tower(a.tower(), b.tower());
      Alg i = Alg::gen(k->has("i") ? k : common_tower(k, fields::qi()), "i");
      TowerPtr t = i.tower();
      Alg o(t, Rational(1));
      return ProjPoint({o, o, i, i, Alg(t)});
    }
    case ShapeTag::S20Special: {
      TowerPtr k = common_tower(a.tower(), b.tower());
      Alg i = Alg::gen(k->has("i") ? k : common_tower(k, fields::qi()), "i");
      TowerPtr t = i.tower();
      return ProjPoint({Alg(t, Rational(1)), Alg(t), Alg(t), Alg(t), i});
    }
    case ShapeTag::Type3: {
      TowerPtr t = common_tower(a.tower(), b.tower());
      Alg o(t, Rational(1));
      return ProjPoint({o, o, o, a.embed(t), b.embed(t)});
    }
    case ShapeTag::Type4: {
      TowerPtr t = common_tower(a.tower(), b.tower());
      Alg o(t, Rational(1));
      return ProjPoint({o, a.embed(t), a.embed(t), b.embed(t), b.embed(t)});
    }
  }
  throw DimensionMismatch("unknown shape");
}

bool Shape::conic_holds() const {
  if (tag == ShapeTag::Type3) return decide_zero(a * a + b * b + Alg(3L));
  if (tag == ShapeTag::Type4) return decide_zero(Alg(2L) * a * a + Alg(2L) * b * b + Alg(1L));
  return true;
}

Alg type3_mu(const Alg& s) { return -(s + Alg(1L)) / (Alg(3L) * (s + Alg(3L))); }
Alg type4_mu(const Alg& s) { return -(s + Alg(1L)) / (Alg(3L) * (Alg(2L) * s + Alg(1L))); }

Alg type3_nu(const Alg& s, const Alg& p) {
  Alg s3 = s * s * s - Alg(3L) * p * s + Alg(3L);  // sigma3 of (1,1,1,a,b)
  Alg num = s3 * (s + Alg(1L)) - Alg(3L) * p * (s + Alg(3L));
  return num / (Alg(3L) * (s + Alg(3L)).pow(4));
}

Alg type4_nu(const Alg& s, const Alg& p) {
  Alg s3 = Alg(2L) * (s * s * s - Alg(3L) * p * s) + Alg(1L);  // sigma3 of (1,a,a,b,b)
  Alg num = s3 * (s + Alg(1L)) - Alg(3L) * p * (Alg(2L) * s + Alg(1L));
  return num / (Alg(3L) * (Alg(2L) * s + Alg(1L)).pow(4));
}

SurfaceParams shape_to_params(const Shape& sh) {
  if (sh.tag == ShapeTag::S20Special || sh.tag == ShapeTag::S30Special) {
    ParamLocus l = singular_param_locus(sh.point());
    if (l.kind != ParamLocus::Point) throw DimensionMismatch("special shape does not fix (mu, nu)");
    return {l.m, l.c};
  }
  if (!sh.conic_holds()) throw NotOnSurface("shape point is not on the quadric");
  Alg s = sh.a + sh.b, p = sh.a * sh.b;
  if (sh.tag == ShapeTag::Type3) {
    if (decide_zero(s + Alg(3L))) throw SigmaOneVanishes("sigma1 = 0 at (1:1:1:a:b)");
    if (!distinct3(sh.a, sh.b)) throw DimensionMismatch("degenerate Type3 shape");
    return {type3_mu(s), type3_nu(s, p)};
  }
  if (decide_zero(Alg(2L) * s + Alg(1L))) throw SigmaOneVanishes("sigma1 = 0 at (1:a:a:b:b)");
  if (!distinct3(sh.a, sh.b)) throw DimensionMismatch("degenerate Type4 shape");
  return {type4_mu(s), type4_nu(s, p)};
}

std::optional<PairData> type3_pair(const SurfaceParams& params) {
  // 3 mu (s + 3) + (s + 1) = 0
  Alg d = Alg(3L) * params.mu + Alg(1L);
  if (decide_zero(d)) return std::nullopt;
  Alg s = -(Alg(9L) * params.mu + Alg(1L)) / d;
  Alg p = (s * s + Alg(3L)) * Alg(Rational(1, 2));
  if (!decide_zero(params.nu - type3_nu(s, p))) return std::nullopt;
  return PairData{s, p};
}

std::optional<PairData> type4_pair(const SurfaceParams& params) {
  Alg d = Alg(6L) * params.mu + Alg(1L);
  if (decide_zero(d)) return std::nullopt;
  Alg s = -(Alg(3L) * params.mu + Alg(1L)) / d;
  Alg p = (Alg(2L) * s * s + Alg(1L)) * Alg(Rational(1, 4));
  if (!decide_zero(params.nu - type4_nu(s, p))) return std::nullopt;
  return PairData{s, p};
}

SingularTest singular_tests(const ProjPoint& P, const SurfaceParams& params) {
  if (P.size() != kN) throw ArityMismatch("points of P^4 have five coordinates");
  TowerPtr k = common_tower(P.tower(), params.tower());
  std::vector<Alg> x;
  for (const auto& v : P.coords()) x.push_back(v.embed(k));
  SurfaceParams pk = params.embed(k);
  MultiPoly q = quadric_form(), f = quartic_form(pk);
  if (!decide_zero(q.evaluate(x)) || !decide_zero(f.evaluate(x))) throw NotOnSurface(P.str());
  std::vector<Alg> gq, gf;
  for (int a = 0; a < kN; ++a) {
    gq.push_back(q.partial(a).evaluate(x));
    gf.push_back(f.partial(a).evaluate(x));
  }
  SingularTest t;
  t.by_rank = rank_serial({gq, gf}) <= 1;
  t.by_minors = true;
  for (int i = 0; i < kN && t.by_minors; ++i)
    for (int j = i + 1; j < kN; ++j) {
      auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      if (!decide_zero(gq[ui] * gf[uj] - gq[uj] * gf[ui])) {
        t.by_minors = false;
        break;
      }
    }
  if (t.by_rank != t.by_minors) throw OracleDisagreement("Jacobian rank and 2x2 minors disagree at " + P.str());
  return t;
}

bool is_singular_point(const ProjPoint& P, const SurfaceParams& params) { return singular_tests(P, params).by_rank; }

ParamLocus singular_param_locus(const ProjPoint& P) {
  const TowerPtr k = P.tower();
  const std::vector<Alg>& x = P.coords();
  Alg s1(k), s3(k), s4(k), sq(k);
  for (const auto& v : x) {
    s1 += v;
    sq += v * v;
    s3 += v * v * v;
    s4 += v * v * v * v;
  }
  if (!decide_zero(sq)) throw NotOnSurface("point is not on the quadric: " + P.str());
  // grad F = G0 + mu G1 + nu G2
  std::vector<Alg> g(kN), G0(kN), G1(kN), G2(kN);
  Alg s1c = s1 * s1 * s1;
  for (std::size_t i = 0; i < kN; ++i) {
    g[i] = Alg(2L) * x[i];
    G0[i] = Alg(4L) * x[i] * x[i] * x[i];
    G1[i] = Alg(4L) * (Alg(3L) * x[i] * x[i] * s1 + s3);
    G2[i] = Alg(4L) * s1c;
  }
  AlgMatrix rows;
  rows.push_back({Alg(4L) * s3 * s1, s1c * s1, s4});
  for (std::size_t i = 0; i < kN; ++i)
    for (std::size_t j = i + 1; j < kN; ++j)
      rows.push_back({g[i] * G1[j] - g[j] * G1[i], g[i] * G2[j] - g[j] * G2[i], g[i] * G0[j] - g[j] * G0[i]});
  // reduced row echelon form on the augmented matrix (mu, nu | 1)
  std::vector<int> piv;
  std::size_t r = 0;
  for (int c = 0; c < 3 && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && decide_zero(rows[p][static_cast<std::size_t>(c)])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Alg inv = rows[r][static_cast<std::size_t>(c)].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      Alg f = rows[i][static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < 3; ++j) rows[i][j] -= f * rows[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  ParamLocus out;
  if (!piv.empty() && piv.back() == 2) return out;  // inconsistent
  if (piv.empty()) {
    out.kind = ParamLocus::Plane;
    return out;
  }
  if (piv.size() == 2) {
    out.kind = ParamLocus::Point;
    out.m = -rows[0][2];
    out.c = -rows[1][2];
    return out;
  }
  if (piv[0] == 1) {  // nu + C = 0, mu free
    out.kind = ParamLocus::Line;
    out.m = Alg(k);
    out.c = -rows[0][2];
    return out;
  }
  // mu + B nu + C = 0
  if (decide_zero(rows[0][1])) throw DimensionMismatch("singular locus is a vertical line in (mu, nu)");
  Alg binv = rows[0][1].inverse();
  out.kind = ParamLocus::Line;
  out.m = -binv;
  out.c = -rows[0][2] * binv;
  return out;
}

}  // namespace dqv
