#include "llmw/random.hpp"

#include <string>

namespace llmw {

Scenario random_scenario(std::mt19937& rng, int l_min, int l_max,
                         double h_margin) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto unif = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  Scenario s;
  s.domain.alpha = unif(0.5, 3.0);
  s.domain.theta = unif(0.0, 5.0);
  s.domain.rho = unit(rng);
  s.domain.zeta = unif(0.0, 2.0);

  const int fam = std::uniform_int_distribution<int>(0, 2)(rng);
  s.cost.family = static_cast<CostFamily>(fam);
  s.cost.a = (s.cost.family == CostFamily::Exp) ? unif(0.5, 3.0)
                                                : unif(-1.0, 2.0);
  s.cost.b = unif(0.2, 3.0);
  s.cost.h_lo = 0.01;
  s.cost.h_hi = 1.0;

  const int count = std::uniform_int_distribution<int>(l_min, l_max)(rng);
  for (int l = 0; l < count; ++l) {
    Product p;
    p.id = "p" + std::to_string(l);
    p.delta = unif(-2.0, 2.0);
    p.omega = unif(0.0, 1.0);
    p.h = unif(s.cost.h_lo + h_margin, s.cost.h_hi - h_margin);
    s.products.push_back(p);
  }
  return s;
}

}  // namespace llmw
