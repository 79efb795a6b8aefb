#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "dqv/tower.hpp"

namespace dqv {

using NameResolver = std::function<std::optional<Alg>(const std::string&)>;

// Parses +, -, *, /, ^ (integer exponent), parentheses, integers and names.
// Names resolve to generators of `tower` unless a resolver is given.
Alg parse_alg(std::string_view text, const TowerPtr& tower);
Alg parse_alg(std::string_view text, const TowerPtr& tower, const NameResolver& resolve);

}  // namespace dqv
