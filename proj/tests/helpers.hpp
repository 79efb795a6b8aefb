#pragma once

#include <random>

#include "dqv/tower.hpp"

namespace dqv::test {

inline Rational random_rational(std::mt19937_64& g, long num = 20, long den = 9) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  Rational q(n(g), d(g));
  q.canonicalize();
  return q;
}

// Random element of t with small rational coordinates.
inline Alg random_alg(std::mt19937_64& g, const TowerPtr& t) {
  Flat f(static_cast<std::size_t>(t->degree()));
  for (auto& c : f) c = random_rational(g, 6, 5);
  return Alg(t, f);
}

}  // namespace dqv::test
