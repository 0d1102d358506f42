#include "llmw/scenario.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace llmw {

double price(const Product& product, const CostModel& model) {
  return cost(model, product.h) + product.omega;
}

std::vector<std::string> validate_scenario(const Scenario& scenario) {
  std::vector<std::string> out;
  const auto& d = scenario.domain;
  const auto& c = scenario.cost;

  if (!(d.alpha > 0.0)) out.push_back("domain.alpha must be > 0");
  if (!(d.theta >= 0.0)) out.push_back("domain.theta must be >= 0");
  if (!(d.rho >= 0.0 && d.rho <= 1.0))
    out.push_back("domain.rho must lie in [0,1]");
  if (!(d.zeta >= 0.0)) out.push_back("domain.zeta must be >= 0");

  if (!(c.b > 0.0)) out.push_back("cost.b must be > 0");
  if (!(c.h_lo > 0.0 && c.h_lo < c.h_hi))
    out.push_back("cost must satisfy 0 < h_lo < h_hi");
  if (c.family == CostFamily::Exp && !(c.a > 0.0))
    out.push_back("cost.a must be > 0 for the exp family");

  if (scenario.products.empty()) out.push_back("products must be nonempty");

  std::set<std::string> seen, dup;
  for (const auto& p : scenario.products) {
    if (!seen.insert(p.id).second) dup.insert(p.id);
    if (!std::isfinite(p.h) || p.h < c.h_lo || p.h > c.h_hi) {
      std::ostringstream os;
      os << "product '" << p.id << "': h=" << p.h << " outside cost domain ["
         << c.h_lo << ", " << c.h_hi << "]";
      out.push_back(os.str());
    }
    if (!(p.omega >= 0.0))
      out.push_back("product '" + p.id + "': omega must be >= 0");
  }
  for (const auto& id : dup)
    out.push_back("duplicate product id '" + id + "'");

  return out;
}

void require_valid(const Scenario& scenario) {
  auto violations = validate_scenario(scenario);
  if (violations.empty()) return;
  std::string msg = "invalid scenario:";
  for (const auto& v : violations) msg += "\n  - " + v;
  throw std::invalid_argument(msg);
}

}  // namespace llmw
