#include <map>

#include "dqv/geometry.hpp"

namespace dqv {

namespace {

constexpr int kN = 5;

struct Chart {
  std::vector<Alg> x;  // point with x[chart] = 1
  int chart = 0;
  int solved = 0;
  std::vector<int> free;  // the three remaining coordinates
};

Chart choose_chart(const ProjPoint& P, const SurfaceJets& jets) {
  Chart c;
  c.chart = -1;
  int best_level = 1 << 30;
  for (int i = 0; i < kN; ++i) {
    if (decide_zero(P[i])) continue;
    if (P[i].level() < best_level) {
      best_level = P[i].level();
      c.chart = i;
    }
  }
  TowerPtr k = common_tower(P.tower(), jets.params().tower());
  Alg inv = P[c.chart].embed(k).inverse();
  for (const auto& v : P.coords()) c.x.push_back(v.embed(k) * inv);
  std::vector<Alg> g = jets.grad_q(c.x);
  c.solved = -1;
  for (int i = 0; i < kN; ++i)
    if (i != c.chart && !decide_zero(g[static_cast<std::size_t>(i)])) {
      c.solved = i;
      break;
    }
  if (c.solved < 0) throw QuadricSingularAtPoint(P.str());
  for (int i = 0; i < kN; ++i)
    if (i != c.chart && i != c.solved) c.free.push_back(i);
  return c;
}

MultiPoly truncate(const MultiPoly& p, int deg) {
  MultiPoly out(p.arity(), p.ring());
  for (const auto& [m, c] : p.terms())
    if (m.degree() <= deg) out += MultiPoly::monomial(p.arity(), m, c);
  return out;
}

// p(images) modulo terms of degree > deg in the image variables.
MultiPoly compose_truncated(const MultiPoly& p, const std::vector<MultiPoly>& images, int deg) {
  const int m = images[0].arity();
  TowerPtr k = p.ring();
  for (const auto& im : images) k = common_tower(k, im.ring());
  std::vector<std::vector<MultiPoly>> pw(images.size());
  MultiPoly acc(m, k);
  for (const auto& [mono, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(m, c.embed(k));
    for (std::size_t i = 0; i < images.size(); ++i) {
      int e = mono.e[i];
      if (!e) continue;
      auto& v = pw[i];
      if (v.empty()) v.push_back(MultiPoly::constant(m, Alg(k, Rational(1))));
      while (static_cast<int>(v.size()) <= e) v.push_back(truncate(v.back() * images[i], deg));
      term = truncate(term * v[static_cast<std::size_t>(e)], deg);
    }
    acc += term;
  }
  return acc;
}

}  // namespace

AlgMatrix restricted_hessian_lagrange(const ProjPoint& P, const SurfaceJets& jets, int* chart, int* solved) {
  Chart c = choose_chart(P, jets);
  if (chart) *chart = c.chart;
  if (solved) *solved = c.solved;
  const auto j = static_cast<std::size_t>(c.solved);
  std::vector<Alg> gq = jets.grad_q(c.x), gf = jets.grad_f(c.x);
  Alg kappa = gf[j] / gq[j];
  for (int i = 0; i < kN; ++i) {
    if (i == c.chart) continue;
    auto ui = static_cast<std::size_t>(i);
    if (!decide_zero(gf[ui] - kappa * gq[ui])) throw NotSingularPoint(P.str());
  }
  AlgMatrix hq = jets.hess_q(c.x), hf = jets.hess_f(c.x);
  // B: u -> delta, with delta_j = -(sum g_k u_k) / g_j
  AlgMatrix B(kN, std::vector<Alg>(3));
  Alg ginv = gq[j].inverse();
  for (std::size_t l = 0; l < 3; ++l) {
    auto k = static_cast<std::size_t>(c.free[l]);
    B[k][l] = Alg(1L);
    B[j][l] = -gq[k] * ginv;
  }
  AlgMatrix h(3, std::vector<Alg>(3));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a; b < 3; ++b) {
      Alg s;
      for (std::size_t r = 0; r < kN; ++r) {
        if (B[r][a].is_zero()) continue;
        for (std::size_t t = 0; t < kN; ++t) {
          if (B[t][b].is_zero()) continue;
          s += B[r][a] * (hf[r][t] - kappa * hq[r][t]) * B[t][b];
        }
      }
      h[a][b] = h[b][a] = s;
    }
  return h;
}

AlgMatrix restricted_hessian_jet(const ProjPoint& P, const SurfaceJets& jets) {
  Chart c = choose_chart(P, jets);
  const TowerPtr k = c.x[0].tower();
  const auto j = static_cast<std::size_t>(c.solved);
  std::vector<Alg> gq = jets.grad_q(c.x);
  // delta_j = w1 + w2 with w1 linear, w2 quadratic in u, fixed by matching
  // coefficients of q(P + delta) order by order
  MultiPoly w1(3, k);
  for (std::size_t l = 0; l < 3; ++l)
    w1 -= gq[static_cast<std::size_t>(c.free[l])] * MultiPoly::var(3, static_cast<int>(l), k);
  w1 = gq[j].inverse() * w1;
  auto images = [&](const MultiPoly& wj) {
    std::vector<MultiPoly> im;
    for (int i = 0; i < kN; ++i) {
      auto ui = static_cast<std::size_t>(i);
      MultiPoly v = MultiPoly::constant(3, c.x[ui]);
      for (std::size_t l = 0; l < 3; ++l)
        if (c.free[l] == i) v += MultiPoly::var(3, static_cast<int>(l), k);
      if (ui == j) v += wj;
      im.push_back(v);
    }
    return im;
  };
  MultiPoly q1 = compose_truncated(jets.q(), images(w1), 2);
  if (!q1.homogeneous_part(0).is_zero() || !q1.homogeneous_part(1).is_zero())
    throw OracleDisagreement("linear solution of the quadric failed at " + P.str());
  MultiPoly w2 = (-gq[j].inverse()) * q1.homogeneous_part(2);
  MultiPoly q2 = compose_truncated(jets.q(), images(w1 + w2), 2);
  if (!q2.is_zero()) throw OracleDisagreement("second-order solution of the quadric failed at " + P.str());
  MultiPoly f2 = compose_truncated(jets.f(), images(w1 + w2), 2);
  if (!f2.homogeneous_part(0).is_zero()) throw NotOnSurface(P.str());
  if (!f2.homogeneous_part(1).is_zero()) throw NotSingularPoint(P.str());
  AlgMatrix h(3, std::vector<Alg>(3, Alg(k)));
  for (const auto& [m, coeff] : f2.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t l = 0; l < 3; ++l)
      for (int e = 0; e < m.e[l]; ++e) idx.push_back(l);
    if (idx[0] == idx[1]) {
      h[idx[0]][idx[0]] = Alg(2L) * coeff;
    } else {
      h[idx[0]][idx[1]] = h[idx[1]][idx[0]] = coeff;
    }
  }
  return h;
}

SingularityReport odp_certify(const ProjPoint& P, const SurfaceJets& jets, const std::string& orbit, bool cross_check) {
  SingularityReport r;
  r.point = P;
  r.orbit = orbit;
  AlgMatrix h = restricted_hessian_lagrange(P, jets, &r.chart, &r.solved);
  if (cross_check) {
    AlgMatrix h2 = restricted_hessian_jet(P, jets);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (!decide_zero(h[a][b] - h2[a][b]))
          throw OracleDisagreement("restricted Hessians differ at " + P.str());
    r.cross_checked = true;
  }
  r.hessian_rank = rank_serial(h);
  r.is_odp = r.hessian_rank == 3;
  return r;
}

SingularityReport odp_certify(const ProjPoint& P, const SurfaceParams& params, const std::string& orbit) {
  SurfaceJets jets(params);
  return odp_certify(P, jets, orbit, true);
}

Alg chart4_hessian_det(const ProjPoint& P, const SurfaceJets& jets) {
  if (decide_zero(P[0])) throw DimensionMismatch("x0 vanishes at " + P.str());
  TowerPtr k = common_tower(P.tower(), jets.params().tower());
  Alg inv = P[0].embed(k).inverse();
  std::vector<Alg> x;
  for (const auto& v : P.coords()) x.push_back(v.embed(k) * inv);
  std::vector<Alg> gq = jets.grad_q(x), gf = jets.grad_f(x);
  std::size_t j = 1;
  while (j < kN && decide_zero(gq[j])) ++j;
  if (j == kN) throw QuadricSingularAtPoint(P.str());
  Alg kappa = gf[j] / gq[j];
  AlgMatrix hq = jets.hess_q(x), hf = jets.hess_f(x);
  AlgMatrix m(4, std::vector<Alg>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) m[a][b] = hf[a + 1][b + 1] - kappa * hq[a + 1][b + 1];
  return det_alg(m);
}

}  // namespace dqv
