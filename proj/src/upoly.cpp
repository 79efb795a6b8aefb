#include "dqv/upoly.hpp"

#include <numeric>

namespace dqv {

UPoly::UPoly(TowerPtr k) : k_(std::move(k)) {}

UPoly::UPoly(TowerPtr k, std::vector<Alg> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = c.embed(k_);
  trim();
}

UPoly UPoly::monomial(TowerPtr k, const Alg& c, int e) {
  std::vector<Alg> v(static_cast<std::size_t>(e + 1), Alg(k));
  v.back() = c;
  return UPoly(std::move(k), std::move(v));
}

UPoly UPoly::from_rationals(const std::vector<Rational>& coeffs) {
  std::vector<Alg> v(coeffs.begin(), coeffs.end());
  return UPoly(FieldTower::rationals(), std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Alg UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Alg(k_);
  return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::embed(const TowerPtr& k) const { return UPoly(k, c_); }

UPoly UPoly::monic() const {
  if (is_zero()) throw ZeroElement("monic of the zero polynomial");
  if (lc().is_one()) return *this;
  Alg inv = lc().inverse();
  std::vector<Alg> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * inv);
  return UPoly(k_, std::move(v));
}

UPoly UPoly::derivative() const {
  std::vector<Alg> v;
  for (int i = 1; i <= degree(); ++i) v.push_back(c_[static_cast<std::size_t>(i)] * Alg(static_cast<long>(i)));
  return UPoly(k_, std::move(v));
}

Alg UPoly::eval(const Alg& x) const {
  Alg acc(common_tower(k_, x.tower()));
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
  return acc;
}

UPoly UPoly::operator-() const {
  std::vector<Alg> v;
  for (const auto& c : c_) v.push_back(-c);
  return UPoly(k_, std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  TowerPtr k = common_tower(a.k_, b.k_);
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<Alg> v(n, Alg(k));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(k, std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  TowerPtr k = common_tower(a.k_, b.k_);
  if (a.is_zero() || b.is_zero()) return UPoly(k);
  std::vector<Alg> v(a.c_.size() + b.c_.size() - 1, Alg(k));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(k, std::move(v));
}

UPoly operator*(const Alg& s, const UPoly& a) {
  TowerPtr k = common_tower(a.k_, s.tower());
  std::vector<Alg> v;
  for (const auto& c : a.c_) v.push_back(s * c);
  return UPoly(k, std::move(v));
}

bool operator==(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Alg& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool simple = c.is_rational();
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (mono.empty())
      term = simple ? cs : "(" + cs + ")";
    else if (c.is_one())
      term = mono;
    else if (simple && c == Alg(-1L))
      term = "-" + mono;
    else
      term = (simple ? cs : "(" + cs + ")") + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw ZeroElement("polynomial division by zero");
  TowerPtr k = common_tower(a.ring(), b.ring());
  std::vector<Alg> r = a.embed(k).coeffs();
  const int db = b.degree();
  Alg inv = b.lc().inverse();
  int dr = static_cast<int>(r.size()) - 1;
  if (dr < db) return {UPoly(k), a.embed(k)};
  std::vector<Alg> q(static_cast<std::size_t>(dr - db + 1), Alg(k));
  for (int i = dr; i >= db; --i) {
    const Alg& ri = r[static_cast<std::size_t>(i)];
    if (ri.is_zero()) continue;
    Alg f = ri * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(k, std::move(q)), UPoly(k, std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw OracleDisagreement("inexact polynomial division");
  return q;
}

Gcdex gcdex(const UPoly& a, const UPoly& b) {
  TowerPtr k = common_tower(a.ring(), b.ring());
  UPoly r0 = a.embed(k), r1 = b.embed(k);
  UPoly s0(k, {Alg(k, Rational(1))}), s1(k);
  UPoly t0(k), t1(k, {Alg(k, Rational(1))});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Alg inv = r0.lc().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

UPoly gcd(const UPoly& a, const UPoly& b) { return gcdex(a, b).g; }

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() <= 0) return a;
  UPoly g = gcd(a, a.derivative());
  return exact_div(a, g).monic();
}

UPoly interpolate(const std::vector<Alg>& xs, const std::vector<Alg>& ys) {
  if (xs.size() != ys.size()) throw DimensionMismatch("interpolate: size mismatch");
  TowerPtr k = FieldTower::rationals();
  for (const auto& x : xs) k = common_tower(k, x.tower());
  for (const auto& y : ys) k = common_tower(k, y.tower());
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Alg> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Alg den = xs[i] - xs[i - j];
      if (den.is_zero()) throw DuplicatePoints("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  UPoly p(k);
  for (std::size_t i = n; i-- > 0;) {
    p = p * UPoly(k, {-xs[i], Alg(k, Rational(1))}) + UPoly(k, {dd[i]});
  }
  return p;
}

UPoly cyclotomic(int m) {
  if (m < 1) throw ConfigError("cyclotomic index must be positive");
  // t^m - 1 divided by all Phi_d, d | m, d < m.
  UPoly num = UPoly::from_rationals(std::vector<Rational>(static_cast<std::size_t>(m + 1)));
  std::vector<Rational> c(static_cast<std::size_t>(m + 1));
  c[0] = -1;
  c[static_cast<std::size_t>(m)] = 1;
  num = UPoly::from_rationals(c);
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = exact_div(num, cyclotomic(d));
  return num;
}

}  // namespace dqv
