#pragma once

#include <string>
#include <vector>

namespace dqv {

// images[i] = where i goes.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  static Perm cycle(int n, const std::vector<int>& c);

  int degree() const { return static_cast<int>(p_.size()); }
  int operator()(int i) const { return p_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return p_; }
  Perm inverse() const;
  int order() const;
  bool is_even() const;

  // (a*b)(i) = a(b(i))
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.p_ == b.p_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.p_ < b.p_; }

 private:
  std::vector<int> p_;
};

class PermGroup {
 public:
  PermGroup(std::string name, int degree, std::vector<Perm> gens);

  static PermGroup symmetric(int n);
  static PermGroup alternating(int n);
  // PSL2(5) acting on the six points of P^1(F5): a transitive A5 inside S6.
  static PermGroup psl2_5_on_p1();

  const std::string& name() const { return name_; }
  int degree() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  // Sorted element list (computed at construction).
  const std::vector<Perm>& elements() const { return els_; }
  std::size_t order() const { return els_.size(); }

 private:
  std::string name_;
  int n_;
  std::vector<Perm> gens_;
  std::vector<Perm> els_;
};

}  // namespace dqv
