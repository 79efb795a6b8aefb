#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dqv/errors.hpp"
#include "dqv/rational.hpp"

namespace dqv {

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;
using Flat = std::vector<Rational>;

inline constexpr int kMaxTowerDegree = 64;

// One node per extension step; a node points at the tower below it.
// Elements of a tower of total degree D are flat vectors of D rationals,
// indexed mixed-radix with the lowest level varying fastest, so an element of
// an ancestor embeds by zero padding.
class FieldTower {
 public:
  static TowerPtr rationals();

  const TowerPtr& parent() const { return parent_; }
  int depth() const { return depth_; }
  int degree() const { return degree_; }
  int level_degree() const { return level_degree_; }
  const std::string& name() const { return name_; }
  // c_0..c_{d-1} of t^d + c_{d-1} t^{d-1} + ... + c_0, each flat over parent()
  const std::vector<Flat>& relation() const { return relation_; }
  int origin() const { return origin_; }
  std::uint64_t fingerprint() const { return fingerprint_; }

  // Ancestor at the given depth (self when equal).
  const FieldTower* level(int depth) const;
  // Depth of the nearest level called `name`, or -1.
  int find(const std::string& name) const;
  bool has(const std::string& name) const { return find(name) >= 0; }

  std::string describe() const;
  std::string relation_string() const;

  // Internal constructor; use tower_extend().
  FieldTower(TowerPtr parent, std::string name, std::vector<Flat> relation,
             int origin);
  FieldTower();

 private:
  TowerPtr parent_;
  std::string name_;
  std::vector<Flat> relation_;
  int depth_ = 0;
  int degree_ = 1;
  int level_degree_ = 1;
  int origin_ = -1;
  std::uint64_t fingerprint_ = 0;
};

bool same_tower(const FieldTower& a, const FieldTower& b);
// True when `a` is (structurally) a bottom segment of `b`.
bool is_ancestor(const FieldTower& a, const FieldTower& b);

class Alg;

// Public extension: relation monic of degree >= 2, coefficients low to high.
TowerPtr tower_extend(const TowerPtr& base, const std::string& name,
                      const std::vector<Alg>& relation);
// Same, but admits degree-1 steps (used after a split) and records an origin id.
TowerPtr tower_extend_raw(const TowerPtr& base, const std::string& name,
                          const std::vector<Alg>& relation, int origin);

// Rebuilds `t` with the level at `depth` replaced by a new relation; the levels
// above keep their relations, reinterpreted through generator exponents.
TowerPtr with_relation(const TowerPtr& t, int depth, const std::vector<Alg>& relation);

class Alg {
 public:
  Alg();
  Alg(long v);  // NOLINT(google-explicit-constructor)
  Alg(const Rational& q);  // NOLINT(google-explicit-constructor)
  explicit Alg(TowerPtr t);
  Alg(TowerPtr t, const Rational& q);
  Alg(TowerPtr t, Flat flat);

  // Generator of the level called `name`, embedded in `t`.
  static Alg gen(const TowerPtr& t, const std::string& name);
  static Alg gen_at(const TowerPtr& t, int depth);

  const TowerPtr& tower() const { return tower_; }
  const Flat& flat() const { return c_; }

  bool is_zero() const;  // structural
  bool is_one() const;
  bool is_rational() const;
  Rational rational() const;  // requires is_rational()
  int level() const;  // deepest level carrying a nonzero coefficient

  Alg embed(const TowerPtr& t) const;
  Alg inverse() const;
  Alg pow(long e) const;
  Alg operator-() const;

  Alg& operator+=(const Alg& o);
  Alg& operator-=(const Alg& o);
  Alg& operator*=(const Alg& o);
  Alg& operator/=(const Alg& o);

  friend Alg operator+(Alg a, const Alg& b) { return a += b; }
  friend Alg operator-(Alg a, const Alg& b) { return a -= b; }
  friend Alg operator*(const Alg& a, const Alg& b);
  friend Alg operator/(const Alg& a, const Alg& b) { return a * b.inverse(); }
  friend bool operator==(const Alg& a, const Alg& b);
  friend bool operator!=(const Alg& a, const Alg& b) { return !(a == b); }

  // Coefficient list over the parent of the top level (length = level degree).
  std::vector<Alg> top_coefficients() const;
  static Alg from_top_coefficients(const TowerPtr& t, const std::vector<Alg>& c);

  // Human-readable rendering, e.g. "-1/5 - 2/5*i".
  std::string str() const;

 private:
  TowerPtr tower_;
  Flat c_;
};

// Strict comparison: both operands must live in the same tower.
bool canonical_equal(const Alg& x, const Alg& y);
// Lexicographic order on flat coefficients after embedding; deterministic.
int compare(const Alg& a, const Alg& b);

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

// Dynamic zero test: structural zero, otherwise certified by inversion.
// Throws ZeroDivisor when x vanishes on some branches of the quotient ring only.
bool decide_zero(const Alg& x);

// Sign automorphism t -> -t of a pure quadratic level (t^2 = c).
Alg conjugate(const Alg& x, const std::string& level_name);

// Re-expresses x, built over `from`, inside a structurally compatible tower.
Alg reinterpret(const Alg& x, const TowerPtr& to);

class ZeroDivisor : public Error {
 public:
  ZeroDivisor(int depth, int origin, std::string level_name, TowerPtr parent,
              std::vector<Flat> factor, std::vector<Flat> cofactor);
  int depth;
  int origin;
  std::string level_name;
  TowerPtr parent;
  std::vector<Flat> factor;    // monic, low to high, leading 1 included
  std::vector<Flat> cofactor;  // relation / factor
};

}  // namespace dqv
