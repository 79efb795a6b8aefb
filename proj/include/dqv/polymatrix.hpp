#pragma once

#include <vector>

#include "dqv/multipoly.hpp"

namespace dqv {

class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int arity, TowerPtr k = FieldTower::rationals());
  explicit PolyMatrix(std::vector<std::vector<MultiPoly>> entries);

  int rows() const { return r_; }
  int cols() const { return c_; }
  int arity() const { return n_; }
  MultiPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const MultiPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  PolyMatrix minor_matrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  std::vector<std::vector<Alg>> evaluate(const std::vector<Alg>& x) const;

 private:
  int r_, c_, n_;
  std::vector<std::vector<MultiPoly>> e_;
};

// Cofactor expansion along the row or column with the fewest terms.
MultiPoly det(const PolyMatrix& m);
// Fraction-free elimination with exact multivariate division (cross-check).
MultiPoly det_bareiss(const PolyMatrix& m);

}  // namespace dqv
