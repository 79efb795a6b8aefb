#include "dqv/dynamic.hpp"

#include "dqv/upoly.hpp"

namespace dqv {

SplitContext::SplitContext(std::map<int, std::vector<Flat>> overrides)
    : overrides_(std::move(overrides)) {}

TowerPtr SplitContext::adjoin(const TowerPtr& base, const std::string& name,
                              const std::vector<Alg>& relation) {
  const int id = next_id_++;
  auto it = overrides_.find(id);
  if (it == overrides_.end()) return tower_extend_raw(base, name, relation, id);
  std::vector<Alg> rel;
  for (const auto& f : it->second) rel.emplace_back(base, f);
  return tower_extend_raw(base, name, rel, id);
}

namespace detail {

std::vector<std::map<int, std::vector<Flat>>> split_overrides(
    const std::map<int, std::vector<Flat>>& current, const ZeroDivisor& z) {
  std::vector<std::map<int, std::vector<Flat>>> out;
  for (const auto* part : {&z.factor, &z.cofactor}) {
    auto m = current;
    // Any level adjoined after this one was built over the old relation; its
    // override no longer applies.
    for (auto it = m.begin(); it != m.end();) it = it->first > z.origin ? m.erase(it) : std::next(it);
    m[z.origin] = *part;
    out.push_back(std::move(m));
  }
  return out;
}

std::string describe_override(const TowerPtr&, int id, const std::vector<Flat>& rel) {
  std::string s = "#" + std::to_string(id) + ": degree " + std::to_string(rel.size() - 1);
  return s;
}

}  // namespace detail

}  // namespace dqv
