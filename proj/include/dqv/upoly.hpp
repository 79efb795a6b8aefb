#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dqv/tower.hpp"

namespace dqv {

// Dense univariate polynomial with coefficients in a tower (low to high).
class UPoly {
 public:
  explicit UPoly(TowerPtr k = FieldTower::rationals());
  UPoly(TowerPtr k, std::vector<Alg> coeffs);
  static UPoly monomial(TowerPtr k, const Alg& c, int e);
  static UPoly from_rationals(const std::vector<Rational>& coeffs);

  const TowerPtr& ring() const { return k_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Alg>& coeffs() const { return c_; }
  Alg coeff(int i) const;
  const Alg& lc() const { return c_.back(); }

  UPoly embed(const TowerPtr& k) const;
  UPoly monic() const;
  UPoly derivative() const;
  Alg eval(const Alg& x) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Alg& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b);

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  TowerPtr k_;
  std::vector<Alg> c_;
};

// Division with remainder; the divisor's leading coefficient is inverted
// (which may raise ZeroDivisor from a lower level).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly exact_div(const UPoly& a, const UPoly& b);

struct Gcdex {
  UPoly g;  // monic gcd
  UPoly s;  // s*a + t*b = g
  UPoly t;
};
Gcdex gcdex(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& a);

// Exact Lagrange interpolation through (x_i, y_i), distinct x_i.
UPoly interpolate(const std::vector<Alg>& xs, const std::vector<Alg>& ys);

// The m-th cyclotomic polynomial over Q.
UPoly cyclotomic(int m);

}  // namespace dqv
