#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dqv/tower.hpp"

namespace dqv {

inline constexpr int kMaxArity = 16;

struct Mono {
  std::array<std::uint8_t, kMaxArity> e{};
  int degree() const;
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

// Graded lexicographic order: higher total degree first, then lex with x0 largest.
struct GrLex {
  bool operator()(const Mono& a, const Mono& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Mono, Alg, GrLex>;

  explicit MultiPoly(int arity = 0, TowerPtr k = FieldTower::rationals());
  static MultiPoly constant(int arity, const Alg& c);
  static MultiPoly var(int arity, int i, TowerPtr k = FieldTower::rationals());
  static MultiPoly monomial(int arity, const Mono& m, const Alg& c);

  int arity() const { return n_; }
  const TowerPtr& ring() const { return k_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  int total_degree() const;  // -1 for zero
  bool is_homogeneous() const;
  Alg coeff(const Mono& m) const;
  MultiPoly homogeneous_part(int d) const;
  // Leading term in GrLex.
  const std::pair<const Mono, Alg>& lead() const { return *t_.begin(); }

  MultiPoly embed(const TowerPtr& k) const;
  MultiPoly pow(int e) const;
  MultiPoly partial(int i) const;
  Alg evaluate(const std::vector<Alg>& x) const;
  // x_i -> images[i]; images share an arity which becomes the result's arity.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  // Adds `extra` trailing variables (or drops unused trailing ones when negative).
  MultiPoly with_arity(int n) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Alg& s, const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const Alg& s) { return s * a; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const Mono& m, const Alg& c);
  int n_;
  TowerPtr k_;
  Terms t_;
};

// Exact quotient a / b; throws OracleDisagreement when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

MultiPoly power_sum(int k, int n, TowerPtr ring = FieldTower::rationals());

// x -> A x, i.e. x_i -> sum_j A[i][j] x_j; A must be invertible.
MultiPoly substitute_linear(const MultiPoly& p, const std::vector<std::vector<Alg>>& A);

struct Jet2 {
  Alg value;
  std::vector<Alg> gradient;
  std::vector<std::vector<Alg>> hessian;  // second partials; quadratic part is v^T H v / 2
};
Jet2 jet2(const MultiPoly& p, const std::vector<Alg>& point);

// Exact determinant of a small square matrix over a tower (Bareiss).
Alg det_alg(std::vector<std::vector<Alg>> m);

}  // namespace dqv
