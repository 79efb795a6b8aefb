#include "dqv/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dqv/errors.hpp"

namespace dqv {

Perm::Perm(std::vector<int> images) : p_(std::move(images)) {
  std::vector<int> s = p_;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i)) throw ConfigError("not a permutation");
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::cycle(int n, const std::vector<int>& c) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  for (std::size_t k = 0; k < c.size(); ++k) v[static_cast<std::size_t>(c[k])] = c[(k + 1) % c.size()];
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) v[static_cast<std::size_t>(p_[i])] = static_cast<int>(i);
  return Perm(std::move(v));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw ArityMismatch("permutations of different degree");
  std::vector<int> v(b.p_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.p_[static_cast<std::size_t>(b.p_[i])];
  Perm r;
  r.p_ = std::move(v);
  return r;
}

int Perm::order() const {
  Perm id = identity(degree());
  Perm x = *this;
  int k = 1;
  while (!(x == id)) {
    x = x * *this;
    ++k;
  }
  return k;
}

bool Perm::is_even() const {
  std::vector<char> seen(p_.size(), 0);
  int transpositions = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p_[j])) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

PermGroup::PermGroup(std::string name, int degree, std::vector<Perm> gens)
    : name_(std::move(name)), n_(degree), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.degree() != n_) throw ArityMismatch("generator degree mismatch");
  std::set<Perm> seen{Perm::identity(n_)};
  std::vector<Perm> frontier{Perm::identity(n_)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : frontier)
      for (const auto& s : gens_) {
        Perm h = s * g;
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  els_.assign(seen.begin(), seen.end());
}

PermGroup PermGroup::symmetric(int n) {
  std::vector<int> c(static_cast<std::size_t>(n));
  std::iota(c.begin(), c.end(), 0);
  return PermGroup("S" + std::to_string(n), n, {Perm::cycle(n, {0, 1}), Perm::cycle(n, c)});
}

PermGroup PermGroup::alternating(int n) {
  std::vector<int> c;
  if (n % 2) {
    for (int i = 0; i < n; ++i) c.push_back(i);
  } else {
    for (int i = 1; i < n; ++i) c.push_back(i);
  }
  return PermGroup("A" + std::to_string(n), n, {Perm::cycle(n, {0, 1, 2}), Perm::cycle(n, c)});
}

PermGroup PermGroup::psl2_5_on_p1() {
  // points 0..4 = F5, 5 = infinity
  std::vector<int> t(6), s(6);
  for (int z = 0; z < 5; ++z) t[static_cast<std::size_t>(z)] = (z + 1) % 5;
  t[5] = 5;
  // z -> -1/z
  s[0] = 5;
  s[5] = 0;
  for (int z = 1; z < 5; ++z) {
    int inv = 1;
    while ((inv * z) % 5 != 1) ++inv;
    s[static_cast<std::size_t>(z)] = (5 - inv) % 5;
  }
  return PermGroup("A5'", 6, {Perm(t), Perm(s)});
}

}  // namespace dqv
