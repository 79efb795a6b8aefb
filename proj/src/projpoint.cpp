#include "dqv/projpoint.hpp"

#include <algorithm>
#include <set>

namespace dqv {

ProjPoint::ProjPoint(std::vector<Alg> coords) : x_(std::move(coords)) {
  if (x_.empty()) throw ArityMismatch("empty point");
  TowerPtr t = FieldTower::rationals();
  for (const auto& v : x_) t = common_tower(t, v.tower());
  std::size_t lead = x_.size();
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (!decide_zero(x_[i])) {
      lead = i;
      break;
    }
  if (lead == x_.size()) throw ZeroElement("all coordinates vanish");
  Alg inv = x_[lead].inverse();
  for (auto& v : x_) v = (v * inv).embed(t);
  for (std::size_t i = 0; i < lead; ++i) x_[i] = Alg(t);
}

TowerPtr ProjPoint::tower() const { return x_.empty() ? FieldTower::rationals() : x_[0].tower(); }

ProjPoint ProjPoint::permuted(const Perm& g) const {
  if (g.degree() != size()) throw ArityMismatch("permutation degree differs from point arity");
  std::vector<Alg> y(x_.size());
  for (int i = 0; i < size(); ++i) y[static_cast<std::size_t>(g(i))] = x_[static_cast<std::size_t>(i)];
  return ProjPoint(std::move(y));
}

ProjPoint ProjPoint::embed(const TowerPtr& t) const {
  ProjPoint p;
  for (const auto& v : x_) p.x_.push_back(v.embed(t));
  return p;
}

int compare(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (int i = 0; i < a.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c) return c;
  }
  return 0;
}

std::string ProjPoint::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < x_.size(); ++i) s += (i ? " : " : "") + x_[i].str();
  return s + ")";
}

Orbit::Orbit(std::string group, std::vector<ProjPoint> points) : group_(std::move(group)), pts_(std::move(points)) {
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool Orbit::contains(const ProjPoint& p) const { return std::binary_search(pts_.begin(), pts_.end(), p); }

Orbit orbit(const ProjPoint& p, const PermGroup& g) {
  if (p.size() != g.degree()) throw ArityMismatch("point arity differs from group degree");
  std::set<ProjPoint> seen{p};
  std::vector<ProjPoint> frontier{p};
  while (!frontier.empty()) {
    std::vector<ProjPoint> next;
    for (const auto& q : frontier)
      for (const auto& s : g.generators()) {
        ProjPoint r = q.permuted(s);
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  return Orbit(g.name(), std::vector<ProjPoint>(seen.begin(), seen.end()));
}

std::size_t stabilizer_order(const ProjPoint& p, const PermGroup& g) {
  std::size_t n = 0;
  for (const auto& e : g.elements())
    if (p.permuted(e) == p) ++n;
  return n;
}

bool closed_under(const Orbit& o, const PermGroup& g) {
  for (const auto& p : o.points())
    for (const auto& s : g.generators())
      if (!o.contains(p.permuted(s))) return false;
  return true;
}

}  // namespace dqv
