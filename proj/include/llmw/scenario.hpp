#pragma once

#include <string>
#include <vector>

#include "llmw/cost.hpp"

namespace llmw {

/// One LLM product: quality delta, constant markup omega, hallucination
/// tendency h. Price is c(h) + omega.
struct Product {
  std::string id;
  double delta = 0.0;
  double omega = 0.0;
  double h = 0.5;
};

/// Domain-type parameters: price sensitivity alpha, hallucination disutility
/// theta, awareness rho in [0,1], marginal misinformation damage zeta.
struct DomainParams {
  double alpha = 1.0;
  double theta = 0.0;
  double rho = 1.0;
  double zeta = 0.0;
};

/// One domain type, one cost model, a nonempty product set. The unit of all
/// downstream analyses; treat as immutable after validation.
struct Scenario {
  DomainParams domain;
  CostModel cost;
  std::vector<Product> products;

  int size() const { return static_cast<int>(products.size()); }
};

double price(const Product& product, const CostModel& model);

/// Checks every type invariant and returns the complete list of violations,
/// one message per violated field. Empty means valid.
std::vector<std::string> validate_scenario(const Scenario& scenario);

/// Throws std::invalid_argument listing all violations if any.
void require_valid(const Scenario& scenario);

}  // namespace llmw
