#include "dqv/invariants.hpp"

#include <algorithm>
#include <map>

#include "dqv/fields.hpp"

namespace dqv {

namespace {

AlgMatrix mat_mul(const AlgMatrix& a, const AlgMatrix& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  AlgMatrix c(n, std::vector<Alg>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Alg s;
      for (std::size_t t = 0; t < k; ++t)
        if (!a[i][t].is_zero() && !b[t][j].is_zero()) s += a[i][t] * b[t][j];
      c[i][j] = s;
    }
  return c;
}

bool mat_less(const AlgMatrix& a, const AlgMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      int c = compare(a[i][j], b[i][j]);
      if (c) return c < 0;
    }
  return false;
}

AlgMatrix identity(int n) {
  AlgMatrix m(static_cast<std::size_t>(n), std::vector<Alg>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Alg(1L);
  return m;
}

void gen_monos(int n, int k, int i, Mono& cur, std::vector<Mono>& out) {
  if (i == n - 1) {
    cur.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k);
    out.push_back(cur);
    cur.e[static_cast<std::size_t>(i)] = 0;
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    gen_monos(n, k - e, i + 1, cur, out);
  }
  cur.e[static_cast<std::size_t>(i)] = 0;
}

MultiPoly linear_image(const AlgMatrix& g, int i) {
  const int n = static_cast<int>(g.size());
  MultiPoly p(n);
  for (int j = 0; j < n; ++j)
    p += g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * MultiPoly::var(n, j);
  return p;
}

MultiPoly act(const MultiPoly& p, const AlgMatrix& g) {
  std::vector<MultiPoly> im;
  for (int i = 0; i < p.arity(); ++i) im.push_back(linear_image(g, i));
  return p.compose(im);
}

}  // namespace

MatrixGroup::MatrixGroup(std::string name, std::vector<AlgMatrix> gens, std::size_t max_order)
    : name_(std::move(name)), gens_(std::move(gens)) {
  if (gens_.empty()) throw DimensionMismatch("matrix group without generators");
  n_ = static_cast<int>(gens_[0].size());
  auto less = [](const AlgMatrix& a, const AlgMatrix& b) { return mat_less(a, b); };
  std::vector<AlgMatrix> seen{identity(n_)};
  std::vector<AlgMatrix> frontier = seen;
  while (!frontier.empty()) {
    std::vector<AlgMatrix> next;
    for (const auto& x : frontier)
      for (const auto& s : gens_) {
        AlgMatrix y = mat_mul(s, x);
        auto it = std::lower_bound(seen.begin(), seen.end(), y, less);
        if (it != seen.end() && !less(y, *it)) continue;
        seen.insert(it, y);
        next.push_back(std::move(y));
        if (seen.size() > max_order) throw DimensionMismatch(name_ + ": group larger than expected");
      }
    frontier = std::move(next);
  }
  std::sort(seen.begin(), seen.end(), less);
  els_ = std::move(seen);
}

MatrixGroup MatrixGroup::from_permutations(const PermGroup& g) {
  std::vector<AlgMatrix> gens;
  for (const auto& p : g.generators()) {
    AlgMatrix m(static_cast<std::size_t>(g.degree()), std::vector<Alg>(static_cast<std::size_t>(g.degree())));
    // (g x)_i = x_{p^{-1}(i)}, so that p(g x) permutes variables
    for (int i = 0; i < g.degree(); ++i) m[static_cast<std::size_t>(p(i))][static_cast<std::size_t>(i)] = Alg(1L);
    gens.push_back(std::move(m));
  }
  return MatrixGroup(g.name() + " (permutation)", std::move(gens));
}

MatrixGroup MatrixGroup::standard_summand(const PermGroup& g) {
  // Coordinates of sum_{i>=1} c_i (e_i - e_0); a permutation p sends e_i - e_0
  // to e_{p(i)} - e_{p(0)} = (e_{p(i)} - e_0) - (e_{p(0)} - e_0).
  const int n = g.degree() - 1;
  std::vector<AlgMatrix> gens;
  for (const auto& p : g.generators()) {
    AlgMatrix m(static_cast<std::size_t>(n), std::vector<Alg>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i) {
      int a = p(i), b = p(0);
      if (a != 0) m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(i - 1)] += Alg(1L);
      if (b != 0) m[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(i - 1)] -= Alg(1L);
    }
    gens.push_back(std::move(m));
  }
  return MatrixGroup(g.name() + " (standard)", std::move(gens));
}

MatrixGroup MatrixGroup::a5_icosahedral() {
  TowerPtr k = fields::q_s5();
  Alg s5 = Alg::gen(k, "s5");
  Alg phi = (Alg(1L) + s5) * Alg(Rational(1, 2));
  Alg iphi = phi - Alg(1L);  // 1/phi
  Alg h(Rational(1, 2));
  auto block = [&](const std::vector<std::vector<Alg>>& r) {
    AlgMatrix m(5, std::vector<Alg>(5, Alg(k)));
    m[0][0] = Alg(k, Rational(1));
    m[1][1] = Alg(k, Rational(1));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m[static_cast<std::size_t>(i + 2)][static_cast<std::size_t>(j + 2)] =
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].embed(k);
    return m;
  };
  Alg o(k, Rational(1)), z(k);
  AlgMatrix cyc = block({{z, z, o}, {o, z, z}, {z, o, z}});
  AlgMatrix sgn = block({{-o, z, z}, {z, -o, z}, {z, z, o}});
  AlgMatrix g3 = block({{h * o, -h * phi, h * iphi}, {h * phi, h * iphi, -h * o}, {h * iphi, h * o, h * phi}});
  MatrixGroup g("A5 on I+I+W3", {cyc, sgn, g3});
  if (g.elements().size() != 60)
    throw DimensionMismatch("icosahedral generators give order " + std::to_string(g.elements().size()));
  return g;
}

std::vector<Mono> monomials(int n, int k) {
  std::vector<Mono> out;
  Mono cur;
  gen_monos(n, k, 0, cur, out);
  std::sort(out.begin(), out.end(), GrLex{});
  return out;
}

AlgMatrix sym_matrix(const AlgMatrix& g, int k) {
  const int n = static_cast<int>(g.size());
  auto monos = monomials(n, k);
  std::map<Mono, std::size_t, GrLex> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  AlgMatrix m(monos.size(), std::vector<Alg>(monos.size()));
  for (std::size_t c = 0; c < monos.size(); ++c) {
    MultiPoly img = act(MultiPoly::monomial(n, monos[c], Alg(1L)), g);
    for (const auto& [mono, coeff] : img.terms()) m[index.at(mono)][c] = coeff;
  }
  return m;
}

int fixed_dimension(const MatrixGroup& g, int k) {
  AlgMatrix stacked;
  for (const auto& s : g.generators()) {
    AlgMatrix m = sym_matrix(s, k);
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= Alg(1L);
    stacked.insert(stacked.end(), m.begin(), m.end());
  }
  const int cols = static_cast<int>(stacked[0].size());
  return cols - rank_parallel(std::move(stacked));
}

std::vector<MultiPoly> invariant_basis(const MatrixGroup& g, int k) {
  const int n = g.dim();
  auto monos = monomials(n, k);
  std::map<Mono, std::size_t, GrLex> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  std::vector<AlgMatrix> symk;
  for (const auto& e : g.elements()) symk.push_back(sym_matrix(e, k));
  // averaged images of each monomial, as coefficient rows
  AlgMatrix rows;
  Alg inv(Rational(1, static_cast<long>(g.elements().size())));
  for (std::size_t c = 0; c < monos.size(); ++c) {
    std::vector<Alg> v(monos.size());
    for (const auto& m : symk)
      for (std::size_t r = 0; r < monos.size(); ++r)
        if (!m[r][c].is_zero()) v[r] += m[r][c];
    for (auto& x : v) x *= inv;
    rows.push_back(std::move(v));
  }
  // echelon basis of the row space
  std::vector<MultiPoly> basis;
  std::size_t r = 0;
  const std::size_t cols = monos.size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && decide_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Alg pinv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= pinv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Alg f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) {
    MultiPoly p(n);
    for (std::size_t j = 0; j < cols; ++j)
      if (!rows[i][j].is_zero()) p += MultiPoly::monomial(n, monos[j], rows[i][j]);
    basis.push_back(std::move(p));
  }
  if (static_cast<int>(basis.size()) != fixed_dimension(g, k))
    throw DimensionMismatch(g.name() + ": averaging produced " + std::to_string(basis.size()) + " invariants");
  return basis;
}

}  // namespace dqv
