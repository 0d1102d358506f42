#include "llmw/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace llmw {

ValidationError::ValidationError(std::vector<std::string> v)
    : std::runtime_error([&] {
        std::string msg = "invalid scenario:";
        for (const auto& s : v) msg += "\n  - " + s;
        return msg;
      }()),
      violations(std::move(v)) {}

namespace {

CostFamily parse_family(const std::string& name) {
  if (name == "inverse") return CostFamily::Inverse;
  if (name == "log") return CostFamily::Log;
  if (name == "exp") return CostFamily::Exp;
  throw ParseError("unknown cost family '" + name +
                   "' (expected inverse, log, or exp)");
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scenario parse: ") + e.what());
  }

  Scenario s;
  try {
    const auto& d = doc.at("domain");
    s.domain.alpha = d.at("alpha").get<double>();
    s.domain.theta = d.at("theta").get<double>();
    s.domain.rho = d.at("rho").get<double>();
    s.domain.zeta = d.at("zeta").get<double>();

    const auto& c = doc.at("cost");
    s.cost.family = parse_family(c.at("family").get<std::string>());
    s.cost.a = c.at("a").get<double>();
    s.cost.b = c.at("b").get<double>();
    s.cost.h_lo = c.at("h_lo").get<double>();
    s.cost.h_hi = c.at("h_hi").get<double>();

    for (const auto& jp : doc.at("products")) {
      Product p;
      p.id = jp.at("id").get<std::string>();
      p.delta = jp.at("delta").get<double>();
      p.omega = jp.at("omega").get<double>();
      p.h = jp.at("h").get<double>();
      s.products.push_back(p);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scenario schema: ") + e.what());
  }

  auto violations = validate_scenario(s);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace llmw
