#include "dqv/polymatrix.hpp"

#include <limits>

namespace dqv {

PolyMatrix::PolyMatrix(int rows, int cols, int arity, TowerPtr k)
    : r_(rows), c_(cols), n_(arity),
      e_(static_cast<std::size_t>(rows), std::vector<MultiPoly>(static_cast<std::size_t>(cols), MultiPoly(arity, k))) {}

PolyMatrix::PolyMatrix(std::vector<std::vector<MultiPoly>> entries) : e_(std::move(entries)) {
  r_ = static_cast<int>(e_.size());
  c_ = r_ ? static_cast<int>(e_[0].size()) : 0;
  n_ = (r_ && c_) ? e_[0][0].arity() : 0;
  for (const auto& row : e_) {
    if (static_cast<int>(row.size()) != c_) throw DimensionMismatch("ragged polynomial matrix");
    for (const auto& p : row)
      if (p.arity() != n_) throw ArityMismatch("matrix entries of different arity");
  }
}

PolyMatrix PolyMatrix::minor_matrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  std::vector<std::vector<MultiPoly>> e;
  for (int i : rows) {
    std::vector<MultiPoly> row;
    for (int j : cols) row.push_back(at(i, j));
    e.push_back(std::move(row));
  }
  if (e.empty() || e[0].empty()) return PolyMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()), n_);
  return PolyMatrix(std::move(e));
}

std::vector<std::vector<Alg>> PolyMatrix::evaluate(const std::vector<Alg>& x) const {
  std::vector<std::vector<Alg>> out;
  for (const auto& row : e_) {
    std::vector<Alg> r;
    for (const auto& p : row) r.push_back(p.evaluate(x));
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

MultiPoly det_rec(const std::vector<std::vector<const MultiPoly*>>& m, int n_vars) {
  const std::size_t n = m.size();
  if (n == 1) return *m[0][0];
  if (n == 2) return (*m[0][0]) * (*m[1][1]) - (*m[0][1]) * (*m[1][0]);
  // pick the line (row or column) with the fewest terms
  std::size_t best = 0;
  bool best_is_row = true;
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rc = 0, cc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      rc += m[i][j]->size();
      cc += m[j][i]->size();
    }
    if (rc < best_cost) best_cost = rc, best = i, best_is_row = true;
    if (cc < best_cost) best_cost = cc, best = i, best_is_row = false;
  }
  MultiPoly acc(n_vars, m[0][0]->ring());
  for (std::size_t k = 0; k < n; ++k) {
    const MultiPoly& e = best_is_row ? *m[best][k] : *m[k][best];
    if (e.is_zero()) continue;
    std::size_t skip_r = best_is_row ? best : k;
    std::size_t skip_c = best_is_row ? k : best;
    std::vector<std::vector<const MultiPoly*>> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == skip_r) continue;
      std::vector<const MultiPoly*> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != skip_c) row.push_back(m[i][j]);
      sub.push_back(std::move(row));
    }
    MultiPoly term = e * det_rec(sub, n_vars);
    if ((skip_r + skip_c) % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

}  // namespace

MultiPoly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of a non-square matrix");
  if (m.rows() > 6) throw NonSquare("cofactor determinant limited to size 6");
  if (m.rows() == 0) return MultiPoly::constant(m.arity(), Alg(1L));
  std::vector<std::vector<const MultiPoly*>> p;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<const MultiPoly*> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(&m.at(i, j));
    p.push_back(std::move(row));
  }
  return det_rec(p, m.arity());
}

MultiPoly det_bareiss(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of a non-square matrix");
  const int n = m.rows();
  const int nv = m.arity();
  if (n == 0) return MultiPoly::constant(nv, Alg(1L));
  std::vector<std::vector<MultiPoly>> a;
  for (int i = 0; i < n; ++i) {
    std::vector<MultiPoly> row;
    for (int j = 0; j < n; ++j) row.push_back(m.at(i, j));
    a.push_back(std::move(row));
  }
  MultiPoly prev = MultiPoly::constant(nv, Alg(1L));
  bool neg = false;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)].is_zero()) ++p;
    if (p == n) return MultiPoly(nv, m.at(0, 0).ring());
    if (p != c) {
      std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(c)]);
      neg = !neg;
    }
    const auto& piv = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    for (int r = c + 1; r < n; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      for (int j = c + 1; j < n; ++j) {
        MultiPoly num = piv * row[static_cast<std::size_t>(j)] -
                        row[static_cast<std::size_t>(c)] * a[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(j)] = exact_divide(num, prev);
      }
      row[static_cast<std::size_t>(c)] = MultiPoly(nv, piv.ring());
    }
    prev = piv;
  }
  MultiPoly d = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return neg ? -d : d;
}

}  // namespace dqv
