#include "llmw/choice.hpp"

#include <cmath>

namespace llmw {

double log_sum_exp(const Eigen::VectorXd& v) {
  const double m = v.maxCoeff();
  return m + std::log((v.array() - m).exp().sum());
}

Eigen::VectorXd decision_utilities(const Scenario& scenario) {
  const auto& d = scenario.domain;
  const int n = scenario.size();
  Eigen::VectorXd v(n);
  for (int l = 0; l < n; ++l) {
    const auto& p = scenario.products[l];
    v[l] = p.delta - d.alpha * price(p, scenario.cost) -
           d.theta * d.rho * p.h;
  }
  return v;
}

Eigen::VectorXd experienced_utilities(const Scenario& scenario) {
  const auto& d = scenario.domain;
  const int n = scenario.size();
  Eigen::VectorXd v(n);
  for (int l = 0; l < n; ++l) {
    const auto& p = scenario.products[l];
    v[l] = p.delta - d.alpha * price(p, scenario.cost) - d.theta * p.h;
  }
  return v;
}

Eigen::VectorXd shares_from_utilities(const Eigen::VectorXd& v) {
  const double m = v.maxCoeff();
  Eigen::VectorXd e = (v.array() - m).exp();
  return e / e.sum();
}

Eigen::VectorXd shares(const Scenario& scenario) {
  return shares_from_utilities(decision_utilities(scenario));
}

Eigen::MatrixXd share_jacobian(const Scenario& scenario) {
  const auto& d = scenario.domain;
  const int n = scenario.size();
  const Eigen::VectorXd s = shares(scenario);
  Eigen::MatrixXd jac(n, n);
  for (int j = 0; j < n; ++j) {
    const double w =
        -d.alpha * cost_prime(scenario.cost, scenario.products[j].h) -
        d.theta * d.rho;
    for (int l = 0; l < n; ++l) {
      const double kron = (l == j) ? 1.0 : 0.0;
      jac(l, j) = s[l] * (kron - s[j]) * w;
    }
  }
  return jac;
}

}  // namespace llmw
