#include "dqv/multipoly.hpp"

#include <algorithm>

namespace dqv {

int Mono::degree() const {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool GrLex::operator()(const Mono& a, const Mono& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.e > b.e;
}

MultiPoly::MultiPoly(int arity, TowerPtr k) : n_(arity), k_(std::move(k)) {
  if (arity < 0 || arity > kMaxArity)
    throw ArityMismatch("arity " + std::to_string(arity) + " outside 0.." + std::to_string(kMaxArity));
}

MultiPoly MultiPoly::constant(int arity, const Alg& c) {
  MultiPoly p(arity, c.tower());
  p.add_term(Mono{}, c);
  return p;
}

MultiPoly MultiPoly::var(int arity, int i, TowerPtr k) {
  if (i < 0 || i >= arity) throw ArityMismatch("variable index out of range");
  MultiPoly p(arity, k);
  Mono m;
  m.e[static_cast<std::size_t>(i)] = 1;
  p.add_term(m, Alg(k, Rational(1)));
  return p;
}

MultiPoly MultiPoly::monomial(int arity, const Mono& m, const Alg& c) {
  MultiPoly p(arity, c.tower());
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Mono& m, const Alg& c) {
  if (c.is_zero()) return;
  if (c.tower() != k_) {
    TowerPtr k = common_tower(k_, c.tower());
    if (k != k_) *this = embed(k);
  }
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c.embed(k_));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

int MultiPoly::total_degree() const { return t_.empty() ? -1 : t_.begin()->first.degree(); }

bool MultiPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = t_.begin()->first.degree();
  return std::all_of(t_.begin(), t_.end(), [d](const auto& kv) { return kv.first.degree() == d; });
}

Alg MultiPoly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Alg(k_) : it->second;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(n_, k_);
  for (const auto& [m, c] : t_)
    if (m.degree() == d) r.t_.emplace(m, c);
  return r;
}

MultiPoly MultiPoly::embed(const TowerPtr& k) const {
  MultiPoly r(n_, k);
  for (const auto& [m, c] : t_) r.t_.emplace(m, c.embed(k));
  return r;
}

MultiPoly MultiPoly::with_arity(int n) const {
  MultiPoly r(n, k_);
  for (const auto& [m, c] : t_) {
    for (int i = n; i < n_; ++i)
      if (m.e[static_cast<std::size_t>(i)]) throw ArityMismatch("dropping a used variable");
    r.t_.emplace(m, c);
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& kv : r.t_) kv.second = -kv.second;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.n_ != n_) throw ArityMismatch("polynomial arities differ");
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.n_ != n_) throw ArityMismatch("polynomial arities differ");
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw ArityMismatch("polynomial arities differ");
  MultiPoly r(a.n_, common_tower(a.k_, b.k_));
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      Mono m;
      for (int i = 0; i < a.n_; ++i) {
        int s = ma.e[static_cast<std::size_t>(i)] + mb.e[static_cast<std::size_t>(i)];
        if (s > 255) throw DegreeTooLarge("exponent overflow");
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s);
      }
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly operator*(const Alg& s, const MultiPoly& a) {
  MultiPoly r(a.n_, common_tower(a.k_, s.tower()));
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a.t_) r.add_term(m, s * c);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_ || a.t_.size() != b.t_.size()) return false;
  auto ia = a.t_.begin();
  auto ib = b.t_.begin();
  for (; ia != a.t_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  return true;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw DegreeTooLarge("negative power of a polynomial");
  MultiPoly r = constant(n_, Alg(k_, Rational(1)));
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MultiPoly MultiPoly::partial(int i) const {
  if (i < 0 || i >= n_) throw ArityMismatch("variable index out of range");
  MultiPoly r(n_, k_);
  for (const auto& [m, c] : t_) {
    int e = m.e[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    Mono d = m;
    d.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e - 1);
    r.add_term(d, c * Alg(static_cast<long>(e)));
  }
  return r;
}

Alg MultiPoly::evaluate(const std::vector<Alg>& x) const {
  if (static_cast<int>(x.size()) != n_) throw ArityMismatch("evaluation point has wrong length");
  TowerPtr k = k_;
  for (const auto& v : x) k = common_tower(k, v.tower());
  // cache powers per variable
  std::vector<std::vector<Alg>> pw(static_cast<std::size_t>(n_));
  Alg acc(k);
  for (const auto& [m, c] : t_) {
    Alg term = c.embed(k);
    for (int i = 0; i < n_; ++i) {
      int e = m.e[static_cast<std::size_t>(i)];
      if (!e) continue;
      auto& p = pw[static_cast<std::size_t>(i)];
      if (p.empty()) p.push_back(Alg(k, Rational(1)));
      while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * x[static_cast<std::size_t>(i)]);
      term *= p[static_cast<std::size_t>(e)];
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != n_) throw ArityMismatch("compose: wrong number of images");
  int m = images.empty() ? 0 : images[0].arity();
  TowerPtr k = k_;
  for (const auto& im : images) {
    if (im.arity() != m) throw ArityMismatch("compose: images of different arity");
    k = common_tower(k, im.ring());
  }
  std::vector<std::vector<MultiPoly>> pw(static_cast<std::size_t>(n_));
  MultiPoly acc(m, k);
  for (const auto& [mono, c] : t_) {
    MultiPoly term = constant(m, c.embed(k));
    for (int i = 0; i < n_; ++i) {
      int e = mono.e[static_cast<std::size_t>(i)];
      if (!e) continue;
      auto& p = pw[static_cast<std::size_t>(i)];
      if (p.empty()) p.push_back(constant(m, Alg(k, Rational(1))));
      while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[static_cast<std::size_t>(i)]);
      term = term * p[static_cast<std::size_t>(e)];
    }
    acc += term;
  }
  return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : t_) {
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      int e = m.e[static_cast<std::size_t>(i)];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(i)] : "x" + std::to_string(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string cs = c.str();
    bool simple = c.is_rational();
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

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw ZeroElement("polynomial division by zero");
  if (a.arity() != b.arity()) throw ArityMismatch("polynomial arities differ");
  const int n = a.arity();
  MultiPoly q(n, common_tower(a.ring(), b.ring()));
  MultiPoly r = a;
  const auto& [lm, lc] = b.lead();
  Alg inv = lc.inverse();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.lead();
    Mono d;
    for (int i = 0; i < n; ++i) {
      if (rm.e[static_cast<std::size_t>(i)] < lm.e[static_cast<std::size_t>(i)])
        throw OracleDisagreement("inexact multivariate division");
      d.e[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(rm.e[static_cast<std::size_t>(i)] - lm.e[static_cast<std::size_t>(i)]);
    }
    MultiPoly t = MultiPoly::monomial(n, d, rc * inv);
    q += t;
    r -= t * b;
  }
  return q;
}

MultiPoly power_sum(int k, int n, TowerPtr ring) {
  if (k < 1 || n < 1) throw ConfigError("power_sum needs k >= 1 and n >= 1");
  MultiPoly p(n, ring);
  for (int i = 0; i < n; ++i) p += MultiPoly::var(n, i, ring).pow(k);
  return p;
}

Alg det_alg(std::vector<std::vector<Alg>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw NonSquare("determinant of a non-square matrix");
  if (n == 0) return Alg(1L);
  TowerPtr k = FieldTower::rationals();
  for (const auto& row : m)
    for (const auto& v : row) k = common_tower(k, v.tower());
  Alg sign(k, Rational(1));
  Alg prev(k, Rational(1));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Alg(k);
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    Alg inv = prev.inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      for (std::size_t j = c + 1; j < n; ++j) m[r][j] = (m[c][c] * m[r][j] - m[r][c] * m[c][j]) * inv;
      m[r][c] = Alg(k);
    }
    prev = m[c][c];
  }
  return sign * m[n - 1][n - 1];
}

MultiPoly substitute_linear(const MultiPoly& p, const std::vector<std::vector<Alg>>& A) {
  const int n = p.arity();
  if (static_cast<int>(A.size()) != n) throw ArityMismatch("substitution matrix has wrong size");
  Alg d = det_alg(A);
  if (decide_zero(d)) throw SingularSubstitution("substitution matrix is singular");
  TowerPtr k = p.ring();
  for (const auto& row : A)
    for (const auto& v : row) k = common_tower(k, v.tower());
  std::vector<MultiPoly> images;
  for (int i = 0; i < n; ++i) {
    MultiPoly im(n, k);
    for (int j = 0; j < n; ++j)
      im += A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * MultiPoly::var(n, j, k);
    images.push_back(std::move(im));
  }
  return p.compose(images);
}

Jet2 jet2(const MultiPoly& p, const std::vector<Alg>& point) {
  const int n = p.arity();
  Jet2 j{p.evaluate(point), {}, {}};
  std::vector<MultiPoly> d1;
  for (int a = 0; a < n; ++a) {
    d1.push_back(p.partial(a));
    j.gradient.push_back(d1.back().evaluate(point));
  }
  j.hessian.assign(static_cast<std::size_t>(n), std::vector<Alg>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Alg v = d1[static_cast<std::size_t>(a)].partial(b).evaluate(point);
      j.hessian[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
      j.hessian[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = v;
    }
  return j;
}

}  // namespace dqv
