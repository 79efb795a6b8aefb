#pragma once

#include <string>
#include <vector>

#include "dqv/perm.hpp"
#include "dqv/tower.hpp"

namespace dqv {

// Homogeneous coordinates scaled so the first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(std::vector<Alg> coords);

  int size() const { return static_cast<int>(x_.size()); }
  const std::vector<Alg>& coords() const { return x_; }
  const Alg& operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  TowerPtr tower() const;

  // Moves coordinate i to position g(i).
  ProjPoint permuted(const Perm& g) const;
  ProjPoint embed(const TowerPtr& t) const;
  // Lexicographic on coordinates; operands may live in nested towers.
  friend int compare(const ProjPoint& a, const ProjPoint& b);
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return compare(a, b) == 0; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return compare(a, b) < 0; }

  std::string str() const;

 private:
  std::vector<Alg> x_;
};

class Orbit {
 public:
  Orbit(std::string group, std::vector<ProjPoint> points);
  const std::string& group() const { return group_; }
  const std::vector<ProjPoint>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  bool contains(const ProjPoint& p) const;

 private:
  std::string group_;
  std::vector<ProjPoint> pts_;  // sorted, distinct
};

// Closure of P under the generators of G.
Orbit orbit(const ProjPoint& p, const PermGroup& g);
// Number of group elements fixing P (used for |Stab| * |orbit| = |G|).
std::size_t stabilizer_order(const ProjPoint& p, const PermGroup& g);
bool closed_under(const Orbit& o, const PermGroup& g);

}  // namespace dqv
