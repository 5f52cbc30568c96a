#pragma once

// JSON forms of matrices and relation checks, for reports and the CLI.

#include <json.hpp>

#include "yk/linear.hpp"
#include "yk/report.hpp"

namespace yk {

inline nlohmann::json to_json(const Mat& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      entries.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline nlohmann::json to_json(const RelationCheck& c) {
  return {{"relation", c.label}, {"residual", c.residual}, {"pass", c.pass}};
}

inline nlohmann::json to_json(const std::vector<RelationCheck>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

}  // namespace yk
