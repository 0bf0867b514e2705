#include "document.hpp"

#include <cstdio>
#include <sstream>

#include "splq/errors.hpp"

namespace splq::cli {

using nlohmann::json;

namespace {

std::string family_name(rule_family f) { return f == rule_family::full ? "full" : "half"; }

rule_family family_from(const std::string& s) {
  if (s == "full") return rule_family::full;
  if (s == "half") return rule_family::half;
  throw validation_error("unknown family '" + s + "'");
}

std::string mode_name(free_parameter::kind k) {
  switch (k) {
    case free_parameter::kind::zero:
      return "zero";
    case free_parameter::kind::value:
      return "value";
    case free_parameter::kind::pin:
      return "pin";
  }
  return "zero";
}

free_parameter::kind mode_from(const std::string& s) {
  if (s == "zero") return free_parameter::kind::zero;
  if (s == "value") return free_parameter::kind::value;
  if (s == "pin") return free_parameter::kind::pin;
  throw validation_error("unknown free parameter mode '" + s + "'");
}

}  // namespace

json to_json(const rule_document& doc) {
  json j;
  j["tool"] = {{"name", "splq"}, {"version", doc.version}};
  const auto& r = doc.request;
  j["request"] = {{"continuity", r.continuity},
                  {"nodes", r.nodes},
                  {"family", family_name(r.family)},
                  {"middle", r.middle},
                  {"free", {{"mode", mode_name(r.free.mode)}, {"value", r.free.value}}}};
  j["partition"] = {{"a", doc.a}, {"b", doc.b}, {"lengths", doc.lengths}};

  json rule;
  rule["degree"] = doc.rule.meta.degree;
  rule["dimension"] = doc.rule.meta.dimension;
  rule["free_value"] = doc.rule.meta.free_value ? json(*doc.rule.meta.free_value) : json(nullptr);
  rule["branches"] = json::array();
  for (auto br : doc.rule.meta.branches) rule["branches"].push_back(br == branch::plus ? "plus" : "minus");
  rule["subintervals"] = json::array();
  for (const auto& s : doc.rule.per_subinterval)
    rule["subintervals"].push_back({{"index", s.index}, {"nodes", s.nodes}, {"weights", s.weights}});
  rule["nodes"] = json::array();
  for (const auto& n : doc.rule.flat) rule["nodes"].push_back({{"subinterval", n.subinterval}, {"x", n.x}, {"w", n.w}});
  j["rule"] = std::move(rule);

  if (doc.verification) {
    json v;
    v["max_residual"] = doc.verification->max_residual;
    v["min_weight"] = doc.verification->min_weight;
    v["per_basis"] = json::array();
    for (const auto& e : doc.verification->per_basis)
      v["per_basis"].push_back({{"id", e.id}, {"exact", e.exact}, {"quadrature", e.quadrature}, {"residual", e.residual}});
    j["verification"] = std::move(v);
  }
  return j;
}

rule_document from_json(const json& j) {
  rule_document d;
  d.version = j.at("tool").at("version").get<std::string>();
  const auto& r = j.at("request");
  d.request.continuity = r.at("continuity").get<int>();
  d.request.nodes = r.at("nodes").get<int>();
  d.request.family = family_from(r.at("family").get<std::string>());
  d.request.middle = r.at("middle").get<int>();
  d.request.free.mode = mode_from(r.at("free").at("mode").get<std::string>());
  d.request.free.value = r.at("free").at("value").get<double>();
  d.a = j.at("partition").at("a").get<double>();
  d.b = j.at("partition").at("b").get<double>();
  d.lengths = j.at("partition").at("lengths").get<std::vector<double>>();

  const auto& rule = j.at("rule");
  d.rule.meta.degree = rule.at("degree").get<int>();
  d.rule.meta.dimension = rule.at("dimension").get<int>();
  if (!rule.at("free_value").is_null()) d.rule.meta.free_value = rule.at("free_value").get<double>();
  for (const auto& b : rule.at("branches"))
    d.rule.meta.branches.push_back(b.get<std::string>() == "minus" ? branch::minus : branch::plus);
  for (const auto& s : rule.at("subintervals"))
    d.rule.per_subinterval.push_back(
        {s.at("index").get<int>(), s.at("nodes").get<std::vector<double>>(), s.at("weights").get<std::vector<double>>()});
  for (const auto& n : rule.at("nodes"))
    d.rule.flat.push_back({n.at("subinterval").get<int>(), n.at("x").get<double>(), n.at("w").get<double>()});

  if (j.contains("verification")) {
    residual_report v;
    const auto& jv = j.at("verification");
    v.max_residual = jv.at("max_residual").get<double>();
    v.min_weight = jv.at("min_weight").get<double>();
    for (const auto& e : jv.at("per_basis"))
      v.per_basis.push_back({e.at("id").get<std::string>(), e.at("exact").get<double>(),
                             e.at("quadrature").get<double>(), e.at("residual").get<double>()});
    d.verification = std::move(v);
  }
  return d;
}

std::string to_csv(const quadrature_rule& rule) {
  std::ostringstream os;
  os << "subinterval,x,w\n";
  char buf[96];
  for (const auto& n : rule.flat) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", n.subinterval, n.x, n.w);
    os << buf;
  }
  return os.str();
}

}  // namespace splq::cli
