#pragma once

#include <vector>

#include "dqv/linalg.hpp"
#include "dqv/multipoly.hpp"
#include "dqv/perm.hpp"

namespace dqv {

// A finite matrix group given by generators; the closure is enumerated.
class MatrixGroup {
 public:
  MatrixGroup(std::string name, std::vector<AlgMatrix> gens, std::size_t max_order = 5000);
  const std::string& name() const { return name_; }
  int dim() const { return n_; }
  const std::vector<AlgMatrix>& generators() const { return gens_; }
  const std::vector<AlgMatrix>& elements() const { return els_; }

  static MatrixGroup from_permutations(const PermGroup& g);
  // Action on the standard summand: basis e_i - e_0, i = 1..n-1.
  static MatrixGroup standard_summand(const PermGroup& g);
  // A5 on I + I + W3: icosahedral rotations over Q(sqrt5) in the last three coordinates.
  static MatrixGroup a5_icosahedral();

 private:
  std::string name_;
  int n_;
  std::vector<AlgMatrix> gens_;
  std::vector<AlgMatrix> els_;
};

// Monomials of degree k in n variables (GrLex order).
std::vector<Mono> monomials(int n, int k);
// Matrix of p -> p(g x) on degree-k forms, columns indexed by monomials(n, k).
AlgMatrix sym_matrix(const AlgMatrix& g, int k);
// dim of { p in Sym^k : p(gx) = p(x) for all generators } via stacked kernels.
int fixed_dimension(const MatrixGroup& g, int k);
// Reynolds averages of all monomials, reduced to a basis.
std::vector<MultiPoly> invariant_basis(const MatrixGroup& g, int k);

}  // namespace dqv
