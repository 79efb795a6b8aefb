#pragma once

#include <map>
#include <optional>
#include <string>

#include "dqv/tower.hpp"

namespace dqv {

// Shared towers used across the checks. Generator names: i, s2, s3, s5, s6,
// s15, s95, w (w^2 + w + 1 = 0), a (octic roots).
namespace fields {

TowerPtr q();
TowerPtr qi();          // i
TowerPtr qi_s6();       // i, s6
TowerPtr qi_s95();      // i, s95
TowerPtr qi_s15();      // i, s15
TowerPtr qi_s5();       // i, s5
TowerPtr q_s5();        // s5
TowerPtr qi_s2_s3();    // i, s2, s3
TowerPtr q_w();         // w
TowerPtr q_a20();       // Q[a]/(octic for the Type3 non-ODP pairs)
TowerPtr q_a30();       // Q[a]/(octic for the Type4 non-ODP pairs)

// Pure quadratic extension by t^2 = c.
TowerPtr sqrt_ext(const TowerPtr& base, const std::string& name, const Alg& c);

// Cyclotomic field Q(zeta_n), generator name "z".
TowerPtr cyclotomic_field(int n);

// Evaluates x (a polynomial in the generators of its own tower) in `to`, with
// each generator replaced by images.at(name).
Alg map_generators(const Alg& x, const TowerPtr& to, const std::map<std::string, Alg>& images);

// A square root of c already present in `t` as q * (product of at most two pure
// quadratic generators with rational squares), if there is one.
std::optional<Alg> find_sqrt(const TowerPtr& t, const Rational& c);
bool is_rational_square(const Rational& c);

}  // namespace fields

}  // namespace dqv
