#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dqv/tower.hpp"

namespace dqv {

// Hands out tower levels for one evaluation attempt. Every adjoin() call gets a
// sequence id; on a rerun the driver may substitute a factor of the relation
// for that id, which is how a split is followed down one branch.
class SplitContext {
 public:
  SplitContext() = default;
  explicit SplitContext(std::map<int, std::vector<Flat>> overrides);

  // relation: monic, low to high, leading coefficient included.
  TowerPtr adjoin(const TowerPtr& base, const std::string& name,
                  const std::vector<Alg>& relation);

  int calls() const { return next_id_; }
  const std::map<int, std::vector<Flat>>& overrides() const { return overrides_; }

 private:
  std::map<int, std::vector<Flat>> overrides_;
  int next_id_ = 0;
};

template <class T>
struct BranchResult {
  T value;
  // One entry per overridden level, e.g. "t: t - 1".
  std::vector<std::string> choices;
};

namespace detail {
std::vector<std::map<int, std::vector<Flat>>> split_overrides(
    const std::map<int, std::vector<Flat>>& current, const ZeroDivisor& z);
std::string describe_override(const TowerPtr& parent_hint, int id, const std::vector<Flat>& rel);
}  // namespace detail

// Runs f from scratch until every branch completes without meeting a zero
// divisor. Branches come back in a fixed order (factor before cofactor).
template <class T>
std::vector<BranchResult<T>> evaluate_with_splitting(const std::function<T(SplitContext&)>& f,
                                                     int max_branches = 64) {
  std::vector<std::map<int, std::vector<Flat>>> work{{}};
  std::vector<BranchResult<T>> done;
  int attempts = 0;
  while (!work.empty()) {
    auto ov = std::move(work.back());
    work.pop_back();
    if (++attempts > 4 * max_branches) throw SplitLimitExceeded("too many reruns");
    SplitContext ctx(ov);
    try {
      T value = f(ctx);
      BranchResult<T> r{std::move(value), {}};
      for (const auto& [id, rel] : ov) r.choices.push_back(detail::describe_override(nullptr, id, rel));
      done.push_back(std::move(r));
      if (static_cast<int>(done.size()) > max_branches)
        throw SplitLimitExceeded("more than " + std::to_string(max_branches) + " branches");
    } catch (const ZeroDivisor& z) {
      if (z.origin < 0) throw;
      auto next = detail::split_overrides(ov, z);
      // push cofactor first so the factor branch runs first
      for (auto it = next.rbegin(); it != next.rend(); ++it) work.push_back(std::move(*it));
    }
  }
  return done;
}

}  // namespace dqv
