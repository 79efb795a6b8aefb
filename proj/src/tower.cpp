#include "dqv/tower.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dqv/upoly.hpp"

namespace dqv {

namespace {

bool block_zero(const Rational* a, int n) {
  for (int i = 0; i < n; ++i)
    if (sgn(a[i]) != 0) return false;
  return true;
}

// out = a*b in T; out must not alias a or b.
void mul_rec(const FieldTower* T, const Rational* a, const Rational* b, Rational* out) {
  if (T->depth() == 0) {
    out[0] = a[0] * b[0];
    return;
  }
  const FieldTower* P = T->parent().get();
  const int m = P->degree(), d = T->level_degree();
  if (d == 1) {
    mul_rec(P, a, b, out);
    return;
  }
  std::vector<Rational> prod(static_cast<std::size_t>((2 * d - 1) * m));
  std::vector<Rational> tmp(static_cast<std::size_t>(m));
  std::vector<char> bz(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) bz[j] = block_zero(b + j * m, m);
  for (int i = 0; i < d; ++i) {
    if (block_zero(a + i * m, m)) continue;
    for (int j = 0; j < d; ++j) {
      if (bz[j]) continue;
      mul_rec(P, a + i * m, b + j * m, tmp.data());
      Rational* dst = &prod[static_cast<std::size_t>((i + j) * m)];
      for (int k = 0; k < m; ++k) dst[k] += tmp[k];
    }
  }
  const auto& rel = T->relation();
  for (int k = 2 * d - 2; k >= d; --k) {
    const Rational* pk = &prod[static_cast<std::size_t>(k * m)];
    if (block_zero(pk, m)) continue;
    for (int j = 0; j < d; ++j) {
      if (block_zero(rel[j].data(), m)) continue;
      mul_rec(P, pk, rel[j].data(), tmp.data());
      Rational* dst = &prod[static_cast<std::size_t>((k - d + j) * m)];
      for (int t = 0; t < m; ++t) dst[t] -= tmp[t];
    }
  }
  for (int i = 0; i < d * m; ++i) out[i] = std::move(prod[static_cast<std::size_t>(i)]);
}

std::uint64_t mix(std::uint64_t h, const std::string& s) {
  return (h ^ std::hash<std::string>{}(s)) * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL;
}

TowerPtr ancestor(const TowerPtr& t, int depth) {
  TowerPtr cur = t;
  while (cur->depth() > depth) cur = cur->parent();
  return cur;
}

}  // namespace

// ---------------------------------------------------------------- FieldTower

FieldTower::FieldTower() : fingerprint_(0x51ULL) {}

FieldTower::FieldTower(TowerPtr parent, std::string name, std::vector<Flat> relation,
                       int origin)
    : parent_(std::move(parent)),
      name_(std::move(name)),
      relation_(std::move(relation)),
      origin_(origin) {
  depth_ = parent_->depth() + 1;
  level_degree_ = static_cast<int>(relation_.size());
  degree_ = parent_->degree() * level_degree_;
  std::uint64_t h = mix(parent_->fingerprint(), name_);
  for (const auto& c : relation_)
    for (const auto& q : c) h = mix(h, q.get_str());
  fingerprint_ = h;
}

TowerPtr FieldTower::rationals() {
  static const TowerPtr q = std::make_shared<const FieldTower>();
  return q;
}

const FieldTower* FieldTower::level(int depth) const {
  const FieldTower* cur = this;
  while (cur->depth_ > depth) cur = cur->parent_.get();
  return cur;
}

int FieldTower::find(const std::string& name) const {
  for (const FieldTower* cur = this; cur->depth_ > 0; cur = cur->parent_.get())
    if (cur->name_ == name) return cur->depth_;
  return -1;
}

std::string FieldTower::relation_string() const {
  if (depth_ == 0) return "";
  UPoly r(parent_);
  std::vector<Alg> c;
  for (const auto& f : relation_) c.emplace_back(parent_, f);
  c.emplace_back(parent_, Rational(1));
  return UPoly(parent_, c).str(name_);
}

std::string FieldTower::describe() const {
  if (depth_ == 0) return "Q";
  return parent_->describe() + "[" + name_ + ": " + relation_string() + " = 0]";
}

bool same_tower(const FieldTower& a, const FieldTower& b) {
  if (&a == &b) return true;
  if (a.depth() != b.depth() || a.degree() != b.degree() ||
      a.fingerprint() != b.fingerprint())
    return false;
  const FieldTower* x = &a;
  const FieldTower* y = &b;
  while (x != y && x->depth() > 0) {
    if (x->name() != y->name() || x->relation() != y->relation()) return false;
    x = x->parent().get();
    y = y->parent().get();
  }
  return true;
}

bool is_ancestor(const FieldTower& a, const FieldTower& b) {
  if (a.depth() > b.depth()) return false;
  return same_tower(a, *b.level(a.depth()));
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return a;
  if (is_ancestor(*a, *b)) return b;
  if (is_ancestor(*b, *a)) return a;
  throw TowerMismatch(a->describe() + " vs " + b->describe());
}

TowerPtr tower_extend_raw(const TowerPtr& base, const std::string& name,
                          const std::vector<Alg>& relation, int origin) {
  if (relation.size() < 2) throw NonMonicRelation("relation of degree < 1");
  Alg lead = relation.back().embed(base);
  if (!lead.is_one()) throw NonMonicRelation("leading coefficient " + lead.str());
  const int d = static_cast<int>(relation.size()) - 1;
  if (static_cast<long>(base->degree()) * d > kMaxTowerDegree)
    throw DegreeTooLarge("total degree " + std::to_string(base->degree() * d) +
                         " exceeds " + std::to_string(kMaxTowerDegree));
  std::vector<Flat> rel;
  rel.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) rel.push_back(relation[static_cast<std::size_t>(j)].embed(base).flat());
  return std::make_shared<const FieldTower>(base, name, std::move(rel), origin);
}

TowerPtr tower_extend(const TowerPtr& base, const std::string& name,
                      const std::vector<Alg>& relation) {
  if (relation.size() < 3) throw NonMonicRelation("extension degree must be at least 2");
  return tower_extend_raw(base, name, relation, -1);
}

TowerPtr with_relation(const TowerPtr& t, int depth, const std::vector<Alg>& relation) {
  if (depth < 1 || depth > t->depth()) throw TowerMismatch("no level at depth " + std::to_string(depth));
  const FieldTower* old = t->level(depth);
  TowerPtr cur = tower_extend_raw(ancestor(t, depth - 1), old->name(), relation, old->origin());
  for (int k = depth + 1; k <= t->depth(); ++k) {
    const FieldTower* lv = t->level(k);
    std::vector<Alg> rel;
    for (const auto& f : lv->relation()) rel.push_back(reinterpret(Alg(lv->parent(), f), cur));
    rel.emplace_back(cur, Rational(1));
    cur = tower_extend_raw(cur, lv->name(), rel, lv->origin());
  }
  return cur;
}

// ---------------------------------------------------------------------- Alg

Alg::Alg() : tower_(FieldTower::rationals()), c_(1) {}
Alg::Alg(long v) : tower_(FieldTower::rationals()), c_{Rational(v)} {}
// mpq_class(n, d) is not reduced on construction, so inputs are canonicalised here.
Alg::Alg(const Rational& q) : tower_(FieldTower::rationals()), c_{q} { c_[0].canonicalize(); }
Alg::Alg(TowerPtr t) : tower_(std::move(t)), c_(static_cast<std::size_t>(tower_->degree())) {}
Alg::Alg(TowerPtr t, const Rational& q)
    : tower_(std::move(t)), c_(static_cast<std::size_t>(tower_->degree())) {
  c_[0] = q;
  c_[0].canonicalize();
}
Alg::Alg(TowerPtr t, Flat flat) : tower_(std::move(t)), c_(std::move(flat)) {
  if (static_cast<int>(c_.size()) > tower_->degree())
    throw TowerMismatch("flat vector too long for " + tower_->describe());
  c_.resize(static_cast<std::size_t>(tower_->degree()));
  for (auto& x : c_) x.canonicalize();
}

Alg Alg::gen_at(const TowerPtr& t, int depth) {
  if (depth < 1 || depth > t->depth()) throw TowerMismatch("no level at depth " + std::to_string(depth));
  const FieldTower* lv = t->level(depth);
  if (lv->level_degree() == 1) return (-Alg(lv->parent(), lv->relation()[0])).embed(t);
  Alg g(t);
  g.c_[static_cast<std::size_t>(lv->parent()->degree())] = 1;
  return g;
}

Alg Alg::gen(const TowerPtr& t, const std::string& name) {
  int d = t->find(name);
  if (d < 0) throw TowerMismatch("no generator '" + name + "' in " + t->describe());
  return gen_at(t, d);
}

bool Alg::is_zero() const { return block_zero(c_.data(), static_cast<int>(c_.size())); }

bool Alg::is_one() const {
  if (c_[0] != 1) return false;
  return block_zero(c_.data() + 1, static_cast<int>(c_.size()) - 1);
}

bool Alg::is_rational() const { return block_zero(c_.data() + 1, static_cast<int>(c_.size()) - 1); }

Rational Alg::rational() const {
  if (!is_rational()) throw TowerMismatch("element is not rational: " + str());
  return c_[0];
}

int Alg::level() const {
  int top = -1;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    if (sgn(c_[static_cast<std::size_t>(i)]) != 0) {
      top = i;
      break;
    }
  if (top <= 0) return 0;
  for (int d = 0; d <= tower_->depth(); ++d)
    if (tower_->level(d)->degree() > top) return d;
  return tower_->depth();
}

Alg Alg::embed(const TowerPtr& t) const {
  if (t == tower_) return *this;
  if (same_tower(*tower_, *t)) return Alg(t, c_);
  if (!is_ancestor(*tower_, *t))
    throw TowerMismatch(tower_->describe() + " does not embed in " + t->describe());
  return Alg(t, c_);
}

Alg Alg::operator-() const {
  Alg r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

Alg& Alg::operator+=(const Alg& o) {
  if (o.tower_ != tower_) {
    TowerPtr t = common_tower(tower_, o.tower_);
    *this = embed(t);
    Alg oe = o.embed(t);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += oe.c_[i];
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Alg& Alg::operator-=(const Alg& o) {
  if (o.tower_ != tower_) {
    TowerPtr t = common_tower(tower_, o.tower_);
    *this = embed(t);
    Alg oe = o.embed(t);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= oe.c_[i];
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Alg operator*(const Alg& a, const Alg& b) {
  if (a.tower_ != b.tower_) {
    TowerPtr t = common_tower(a.tower_, b.tower_);
    return a.embed(t) * b.embed(t);
  }
  if (a.tower_->depth() == 0) return Alg(a.c_[0] * b.c_[0]);
  if (b.is_rational()) {
    Alg r(a);
    const Rational s = b.c_[0];
    for (auto& q : r.c_) q *= s;
    return r;
  }
  if (a.is_rational()) {
    Alg r(b);
    const Rational s = a.c_[0];
    for (auto& q : r.c_) q *= s;
    return r;
  }
  Alg out(a.tower_);
  mul_rec(a.tower_.get(), a.c_.data(), b.c_.data(), out.c_.data());
  return out;
}

Alg& Alg::operator*=(const Alg& o) { return *this = *this * o; }
Alg& Alg::operator/=(const Alg& o) { return *this = *this * o.inverse(); }

bool operator==(const Alg& a, const Alg& b) {
  if (a.tower_ == b.tower_) return a.c_ == b.c_;
  TowerPtr t = common_tower(a.tower_, b.tower_);
  return a.embed(t).c_ == b.embed(t).c_;
}

bool canonical_equal(const Alg& x, const Alg& y) {
  if (!same_tower(*x.tower(), *y.tower()))
    throw TowerMismatch(x.tower()->describe() + " vs " + y.tower()->describe());
  return x.flat() == y.flat();
}

int compare(const Alg& a, const Alg& b) {
  if (a.tower() != b.tower()) {
    TowerPtr t = common_tower(a.tower(), b.tower());
    return compare(a.embed(t), b.embed(t));
  }
  for (std::size_t i = 0; i < a.flat().size(); ++i) {
    int c = cmp(a.flat()[i], b.flat()[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::vector<Alg> Alg::top_coefficients() const {
  if (tower_->depth() == 0) return {*this};
  const TowerPtr& p = tower_->parent();
  const int m = p->degree(), d = tower_->level_degree();
  std::vector<Alg> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    out.emplace_back(p, Flat(c_.begin() + i * m, c_.begin() + (i + 1) * m));
  return out;
}

Alg Alg::from_top_coefficients(const TowerPtr& t, const std::vector<Alg>& c) {
  if (t->depth() == 0) return c.empty() ? Alg() : c[0].embed(t);
  const TowerPtr& p = t->parent();
  if (static_cast<int>(c.size()) > t->level_degree())
    throw TowerMismatch("too many coefficients for level " + t->name());
  Flat f(static_cast<std::size_t>(t->degree()));
  const int m = p->degree();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Alg ci = c[i].embed(p);
    for (int k = 0; k < m; ++k) f[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)] = ci.flat()[static_cast<std::size_t>(k)];
  }
  return Alg(t, std::move(f));
}

Alg Alg::inverse() const {
  if (is_zero()) throw ZeroElement("inverse of zero in " + tower_->describe());
  if (tower_->depth() == 0) return Alg(tower_, 1 / c_[0]);
  if (is_rational()) return Alg(tower_, 1 / c_[0]);
  const TowerPtr& p = tower_->parent();
  std::vector<Alg> top = top_coefficients();
  UPoly x(p, top);
  if (x.degree() == 0) return top[0].inverse().embed(tower_);
  std::vector<Alg> rc;
  for (const auto& f : tower_->relation()) rc.emplace_back(p, f);
  rc.emplace_back(p, Rational(1));
  UPoly r(p, rc);
  Gcdex e = gcdex(x, r);
  if (e.g.degree() == 0) return from_top_coefficients(tower_, e.s.coeffs());
  UPoly co = exact_div(r, e.g).monic();
  std::vector<Flat> ff, cf;
  for (const auto& c : e.g.coeffs()) ff.push_back(c.flat());
  for (const auto& c : co.coeffs()) cf.push_back(c.flat());
  throw ZeroDivisor(tower_->depth(), tower_->origin(), tower_->name(), p, std::move(ff),
                    std::move(cf));
}

Alg Alg::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Alg result(tower_, Rational(1));
  Alg base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Alg::str() const {
  std::vector<std::pair<Rational, std::string>> terms;
  const int depth = tower_->depth();
  for (std::size_t idx = 0; idx < c_.size(); ++idx) {
    if (sgn(c_[idx]) == 0) continue;
    std::string mono;
    std::size_t rem = idx;
    for (int l = 1; l <= depth; ++l) {
      const FieldTower* lv = tower_->level(l);
      std::size_t e = rem % static_cast<std::size_t>(lv->level_degree());
      rem /= static_cast<std::size_t>(lv->level_degree());
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += lv->name();
      if (e > 1) mono += "^" + std::to_string(e);
    }
    terms.emplace_back(c_[idx], mono);
  }
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    Rational q = terms[k].first;
    const std::string& mono = terms[k].second;
    bool neg = sgn(q) < 0;
    if (neg) q = -q;
    if (k == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += q.get_str();
    else if (q == 1)
      out += mono;
    else
      out += q.get_str() + "*" + mono;
  }
  return out;
}

// ------------------------------------------------------------------ helpers

bool decide_zero(const Alg& x) {
  if (x.is_zero()) return true;
  if (x.is_rational()) return false;
  (void)x.inverse();
  return false;
}

Alg conjugate(const Alg& x, const std::string& level_name) {
  const TowerPtr& t = x.tower();
  int d = t->find(level_name);
  if (d < 0) throw TowerMismatch("no level '" + level_name + "' in " + t->describe());
  const FieldTower* lv = t->level(d);
  if (lv->level_degree() != 2 || !Alg(lv->parent(), lv->relation()[1]).is_zero())
    throw TowerMismatch("level '" + level_name + "' is not a pure quadratic");
  const std::size_t below = static_cast<std::size_t>(lv->parent()->degree());
  auto odd = [below](std::size_t idx) { return (idx / below) % 2 == 1; };
  for (int k = d + 1; k <= t->depth(); ++k)
    for (const auto& f : t->level(k)->relation())
      for (std::size_t i = 0; i < f.size(); ++i)
        if (odd(i) && sgn(f[i]) != 0)
          throw TowerMismatch("level above '" + level_name + "' is not invariant");
  Flat f = x.flat();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (odd(i)) f[i] = -f[i];
  return Alg(t, std::move(f));
}

Alg reinterpret(const Alg& x, const TowerPtr& to) {
  const TowerPtr& from = x.tower();
  if (from->depth() != to->depth())
    throw TowerMismatch("reinterpret between towers of different depth");
  const int depth = from->depth();
  std::vector<Alg> gens;
  for (int l = 1; l <= depth; ++l) gens.push_back(Alg::gen_at(to, l));
  Alg out(to);
  for (std::size_t idx = 0; idx < x.flat().size(); ++idx) {
    if (sgn(x.flat()[idx]) == 0) continue;
    Alg term(to, x.flat()[idx]);
    std::size_t rem = idx;
    for (int l = 1; l <= depth; ++l) {
      const std::size_t dl = static_cast<std::size_t>(from->level(l)->level_degree());
      std::size_t e = rem % dl;
      rem /= dl;
      if (e) term *= gens[static_cast<std::size_t>(l - 1)].pow(static_cast<long>(e));
    }
    out += term;
  }
  return out;
}

ZeroDivisor::ZeroDivisor(int depth_, int origin_, std::string level_name_, TowerPtr parent_,
                         std::vector<Flat> factor_, std::vector<Flat> cofactor_)
    : Error("ZeroDivisor", "relation of level '" + level_name_ + "' splits, factor of degree " +
                               std::to_string(factor_.size() - 1)),
      depth(depth_),
      origin(origin_),
      level_name(std::move(level_name_)),
      parent(std::move(parent_)),
      factor(std::move(factor_)),
      cofactor(std::move(cofactor_)) {}

}  // namespace dqv
