#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "document.hpp"
#include "golden.hpp"
#include "splq/errors.hpp"
#include "splq/realline.hpp"

namespace splq::cli {

using nlohmann::json;

namespace {

constexpr double verify_tolerance = 1e-9;
constexpr double fixture_tolerance = 1e-12;

std::vector<double> parse_lengths(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw validation_error("--lengths: cannot read '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw validation_error("--lengths: cannot read '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw validation_error("--lengths needs at least one value");
  return out;
}

free_parameter parse_free(const std::string& s) {
  if (s == "zero") return free_parameter::zero();
  const auto eq = s.find('=');
  if (eq != std::string::npos) {
    const auto key = s.substr(0, eq), val = s.substr(eq + 1);
    double v = 0.0;
    size_t used = 0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == val.size() && used > 0) {
      if (key == "value") return free_parameter::fixed(v);
      if (key == "pin") return free_parameter::pin(v);
    }
  }
  throw validation_error("--free expects zero, value=V or pin=X, got '" + s + "'");
}

void emit(const rule_document& doc, const std::string& format, std::ostream& out, std::ostream& err) {
  if (format == "csv") {
    out << to_csv(doc.rule);
    if (doc.verification) err << "max_residual " << doc.verification->max_residual << '\n';
  } else {
    out << to_json(doc).dump(2) << '\n';
  }
}

residual_report verify(const quadrature_rule& rule, const partition& part, int continuity) {
  spline_space sp{rule.meta.degree, continuity, part.a(), part.b(), part.inner_knots()};
  return residuals(rule, sp);
}

int run_fixture(const std::string& name, const std::string& format, bool check, std::ostream& out,
                std::ostream& err) {
  const auto all = golden::all();
  const auto it = std::find_if(all.begin(), all.end(), [&](const auto& f) { return f.name == name; });
  if (it == all.end()) throw validation_error("--fixture must be 5.1 or 9.1");
  const partition part(it->a, it->b, it->lengths);
  rule_document doc{it->request, it->a, it->b, it->lengths, generate(it->request, part), std::nullopt};
  if (check) doc.verification = verify(doc.rule, part, it->request.continuity);

  double worst = 0.0;
  bool shape = doc.rule.flat.size() == it->expected.size();
  for (size_t i = 0; shape && i < it->expected.size(); ++i) {
    const auto& e = it->expected[i];
    const auto& g = doc.rule.flat[i];
    shape = g.subinterval == e.subinterval;
    worst = std::max({worst, std::abs(g.x - e.x) / std::abs(e.x), std::abs(g.w - e.w) / std::abs(e.w)});
  }
  const bool pass = shape && worst <= fixture_tolerance;
  if (format == "csv") {
    out << to_csv(doc.rule);
  } else {
    auto j = to_json(doc);
    j["fixture"] = {{"name", name}, {"max_relative_error", worst}, {"tolerance", fixture_tolerance}, {"pass", pass}};
    out << j.dump(2) << '\n';
  }
  err << "fixture " << name << ": max relative error " << worst << (pass ? " (ok)" : " (MISMATCH)") << '\n';
  return pass ? ok : numeric_failure;
}

int run_realline(const std::string& kind, int n, const std::string& format, std::ostream& out) {
  if (kind != "c0" && kind != "c1") throw validation_error("--realline must be c0 or c1");
  if (n < 1) throw validation_error("--realline needs --n >= 1");
  const auto r = kind == "c0" ? realline_rule_c0(n) : realline_rule_c1(n);
  if (format == "csv") {
    quadrature_rule q;
    for (size_t i = 0; i < r.nodes.size(); ++i) q.flat.push_back({1, r.nodes[i], r.weights[i]});
    out << to_csv(q);
  } else {
    json j;
    j["tool"] = {{"name", "splq"}, {"version", tool_version}};
    j["realline"] = {{"kind", kind}, {"n", n}, {"nodes", r.nodes}, {"weights", r.weights}};
    out << j.dump(2) << '\n';
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian and 1-parameter optimal quadrature rules for C^0 and C^1 spline spaces", "splq"};
  int continuity = 0, nodes = 1, middle = 0, n = 0;
  std::string lengths, family = "full", free = "zero", format = "json", realline, fixture;
  std::vector<double> interval;
  bool check = false;
  app.add_option("--continuity", continuity, "continuity class c")->check(CLI::IsMember({0, 1}));
  app.add_option("--nodes", nodes, "N, nodes per subinterval");
  app.add_option("--lengths", lengths, "subinterval lengths, comma separated");
  app.add_option("--interval", interval, "A B")->expected(2);
  app.add_option("--middle", middle, "middle subinterval S_M (1-based)");
  app.add_option("--family", family, "full or half")->check(CLI::IsMember({"full", "half"}));
  app.add_option("--free", free, "zero | value=V | pin=X");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--verify", check, "integrate the truncated-power basis and report residuals");
  app.add_option("--realline", realline, "c0 or c1 limit rule")->check(CLI::IsMember({"c0", "c1"}));
  app.add_option("--n", n, "n for --realline");
  app.add_option("--fixture", fixture, "5.1 or 9.1")->check(CLI::IsMember({"5.1", "9.1"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  }

  try {
    if (!fixture.empty()) return run_fixture(fixture, format, check, out, err);
    if (!realline.empty()) return run_realline(realline, n, format, out);
    if (lengths.empty()) throw validation_error("--lengths is required");

    const auto ls = parse_lengths(lengths);
    double a = 0.0, b = 0.0;
    for (double l : ls) b += l;
    if (!interval.empty()) {
      a = interval[0];
      b = interval[1];
    }
    const partition part(a, b, ls);
    rule_request req{continuity, nodes, family == "half" ? rule_family::half : rule_family::full, middle,
                     parse_free(free)};
    if (req.middle == 0) {
      const auto m = admissible_middles(req, part);
      if (m.empty()) throw unsupported_configuration("no admissible --middle for this request");
      req.middle = m.front();
    }
    rule_document doc{req, a, b, ls, generate(req, part), std::nullopt};
    if (check) doc.verification = verify(doc.rule, part, continuity);
    emit(doc, format, out, err);
    if (doc.verification && doc.verification->max_residual > verify_tolerance) {
      err << "error: max residual " << doc.verification->max_residual << " exceeds " << verify_tolerance << '\n';
      return numeric_failure;
    }
    return ok;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const numeric_error& e) {
    err << "error: ";
    if (e.subinterval()) err << "subinterval " << *e.subinterval() << ": ";
    err << e.what() << '\n';
    return numeric_failure;
  }
}

}  // namespace splq::cli
