#include "dqv/fields.hpp"

#include <map>
#include <mutex>

#include "dqv/upoly.hpp"

namespace dqv::fields {

TowerPtr sqrt_ext(const TowerPtr& base, const std::string& name, const Alg& c) {
  return tower_extend(base, name, {-c.embed(base), Alg(base), Alg(base, Rational(1))});
}

namespace {
TowerPtr ext(const TowerPtr& base, const std::string& name, long c) {
  return sqrt_ext(base, name, Alg(c));
}
TowerPtr octic(const std::vector<long>& c) {
  // c high to low, made monic
  TowerPtr b = FieldTower::rationals();
  std::vector<Alg> rel;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rational q(*it, c.front());
    q.canonicalize();
    rel.emplace_back(q);
  }
  return tower_extend(b, "a", rel);
}
}  // namespace

TowerPtr q() { return FieldTower::rationals(); }
TowerPtr qi() {
  static const TowerPtr t = ext(q(), "i", -1);
  return t;
}
TowerPtr qi_s6() {
  static const TowerPtr t = ext(qi(), "s6", 6);
  return t;
}
TowerPtr qi_s95() {
  static const TowerPtr t = ext(qi(), "s95", 95);
  return t;
}
TowerPtr qi_s15() {
  static const TowerPtr t = ext(qi(), "s15", 15);
  return t;
}
TowerPtr qi_s5() {
  static const TowerPtr t = ext(qi(), "s5", 5);
  return t;
}
TowerPtr q_s5() {
  static const TowerPtr t = ext(q(), "s5", 5);
  return t;
}
TowerPtr qi_s2_s3() {
  static const TowerPtr t = ext(ext(qi(), "s2", 2), "s3", 3);
  return t;
}
TowerPtr q_w() {
  static const TowerPtr t = tower_extend(q(), "w", {Alg(1L), Alg(1L), Alg(1L)});
  return t;
}
TowerPtr q_a20() {
  static const TowerPtr t = octic({4, 16, 56, 116, 217, 266, 257, 172, 52});
  return t;
}
TowerPtr q_a30() {
  static const TowerPtr t = octic({512, 2048, 4608, 5952, 5698, 3740, 1765, 602, 163});
  return t;
}

TowerPtr cyclotomic_field(int n) {
  static std::mutex m;
  static std::map<int, TowerPtr> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  UPoly phi = cyclotomic(n);
  TowerPtr t;
  if (phi.degree() == 1) {
    t = tower_extend_raw(q(), "z", phi.coeffs(), -1);
  } else {
    t = tower_extend(q(), "z", phi.coeffs());
  }
  cache[n] = t;
  return t;
}

Alg map_generators(const Alg& x, const TowerPtr& to, const std::map<std::string, Alg>& images) {
  const TowerPtr& from = x.tower();
  const int depth = from->depth();
  std::vector<int> deg(static_cast<std::size_t>(depth + 1), 1);
  std::vector<std::vector<Alg>> powers(static_cast<std::size_t>(depth + 1));
  for (int k = 1; k <= depth; ++k) {
    const FieldTower* lv = from->level(k);
    deg[static_cast<std::size_t>(k)] = lv->level_degree();
    auto it = images.find(lv->name());
    if (it == images.end()) throw TowerMismatch("no image for generator " + lv->name());
    Alg p(to, Rational(1));
    for (int e = 0; e < lv->level_degree(); ++e) {
      powers[static_cast<std::size_t>(k)].push_back(p);
      p *= it->second.embed(to);
    }
  }
  Alg out(to);
  const Flat& f = x.flat();
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    if (sgn(f[idx]) == 0) continue;
    Alg term(to, f[idx]);
    std::size_t rest = idx;
    for (int k = 1; k <= depth; ++k) {
      const auto d = static_cast<std::size_t>(deg[static_cast<std::size_t>(k)]);
      term *= powers[static_cast<std::size_t>(k)][rest % d];
      rest /= d;
    }
    out += term;
  }
  return out;
}

bool is_rational_square(const Rational& c) {
  if (sgn(c) < 0) return false;
  return mpz_perfect_square_p(c.get_num_mpz_t()) && mpz_perfect_square_p(c.get_den_mpz_t());
}

namespace {
Rational rational_sqrt(const Rational& c) {
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), c.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), c.get_den_mpz_t());
  Rational q(n, d);
  q.canonicalize();
  return q;
}
}  // namespace

std::optional<Alg> find_sqrt(const TowerPtr& t, const Rational& c) {
  if (sgn(c) == 0) return Alg(t);
  if (is_rational_square(c)) return Alg(t, rational_sqrt(c));
  // pure quadratic levels t^2 = d with d rational
  std::vector<std::pair<Alg, Rational>> gens;
  for (int k = 1; k <= t->depth(); ++k) {
    const FieldTower* lv = t->level(k);
    if (lv->level_degree() != 2) continue;
    Alg c0(lv->parent(), lv->relation()[0]), c1(lv->parent(), lv->relation()[1]);
    if (!c1.is_zero() || !c0.is_rational()) continue;
    gens.emplace_back(Alg::gen_at(t, k), -c0.rational());
  }
  for (const auto& [g, d] : gens) {
    Rational r = c / d;
    if (is_rational_square(r)) return Alg(t, rational_sqrt(r)) * g;
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Rational r = c / (gens[i].second * gens[j].second);
      if (is_rational_square(r)) return Alg(t, rational_sqrt(r)) * gens[i].first * gens[j].first;
    }
  return std::nullopt;
}

}  // namespace dqv::fields
