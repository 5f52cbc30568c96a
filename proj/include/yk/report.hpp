#pragma once

// Relation-check records shared by the verification suites. Relation labels
// ("Eq28:[U+,U-]", ...) are the stable wire format consumed by downstream
// tooling; treat them as opaque ids. JSON serialization lives in
// yk/serialize.hpp to keep these headers light.

#include <algorithm>
#include <string>
#include <vector>

namespace yk {

struct RelationCheck {
  std::string label;
  double residual = 0.0;
  bool pass = false;
};

inline RelationCheck make_check(std::string label, double residual, double tol) {
  return RelationCheck{std::move(label), residual, residual <= tol};
}

inline bool all_pass(const std::vector<RelationCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

inline double worst_residual(const std::vector<RelationCheck>& checks) {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.residual);
  return w;
}

}  // namespace yk
