#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hnid/identities.hpp"

namespace hnid::detail {

// First violated condition among: n >= 0, every declared parameter present
// and nonnegative, no undeclared parameters, then the explicit constraints.
inline std::optional<std::string> first_violation(const std::vector<std::string>& names,
                                                  const std::vector<Constraint>& constraints,
                                                  const Params& params, std::int64_t n) {
  if (n < 0) return "n >= 0";
  for (const auto& name : names) {
    auto it = params.find(name);
    if (it == params.end()) return "parameter " + name + " is required";
    if (it->second < 0) return name + " >= 0";
  }
  for (const auto& [name, value] : params) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      return "unknown parameter " + name;
    }
  }
  for (const auto& c : constraints) {
    if (!c.holds(params, n)) return c.name;
  }
  return std::nullopt;
}

}  // namespace hnid::detail
