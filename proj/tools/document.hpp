#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "splq/engine.hpp"
#include "splq/splinecheck.hpp"

namespace splq::cli {

inline constexpr const char* tool_version = "0.1.0";

struct rule_document {
  rule_request request;
  double a = 0.0, b = 0.0;
  std::vector<double> lengths;
  quadrature_rule rule;
  std::optional<residual_report> verification;
  std::string version = tool_version;
};

nlohmann::json to_json(const rule_document& doc);
rule_document from_json(const nlohmann::json& j);

std::string to_csv(const quadrature_rule& rule);

}  // namespace splq::cli
