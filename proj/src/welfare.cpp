#include "llmw/welfare.hpp"

#include <cmath>
#include <sstream>

#include "llmw/choice.hpp"

namespace llmw {

double consumer_surplus(const Scenario& scenario) {
  require_valid(scenario);
  const Eigen::VectorXd v = decision_utilities(scenario);
  const Eigen::VectorXd vt = experienced_utilities(scenario);
  const Eigen::VectorXd s = shares_from_utilities(v);
  const double adjustment = s.dot(vt - v);
  return (log_sum_exp(v) + adjustment) / scenario.domain.alpha;
}

WelfareReport net_welfare(const Scenario& scenario) {
  require_valid(scenario);
  const auto& d = scenario.domain;
  const Eigen::VectorXd v = decision_utilities(scenario);
  const Eigen::VectorXd s = shares_from_utilities(v);

  Eigen::VectorXd h(scenario.size());
  for (int l = 0; l < scenario.size(); ++l) h[l] = scenario.products[l].h;
  const double avg_h = s.dot(h);

  WelfareReport report;
  report.cs = consumer_surplus(scenario);
  report.avg_h = avg_h;
  report.externality = d.zeta * avg_h;
  report.nw = report.cs - report.externality;

  // Explicit form obtained by substituting the misperception identity into
  // the CS adjustment; must agree with the definitional value.
  const double explicit_nw =
      (log_sum_exp(v) + (d.rho - 1.0) * d.theta * avg_h) / d.alpha -
      d.zeta * avg_h;
  const double scale = std::max(1.0, std::abs(report.nw));
  if (std::abs(explicit_nw - report.nw) > 1e-10 * scale) {
    std::ostringstream os;
    os << "net_welfare: definitional form " << report.nw
       << " disagrees with explicit form " << explicit_nw;
    throw ConsistencyError(os.str());
  }
  return report;
}

Eigen::VectorXd nw_gradient(const Scenario& scenario) {
  require_valid(scenario);
  const auto& d = scenario.domain;
  const int n = scenario.size();
  const Eigen::VectorXd s = shares(scenario);
  const Eigen::MatrixXd jac = share_jacobian(scenario);

  Eigen::VectorXd h(n);
  for (int l = 0; l < n; ++l) h[l] = scenario.products[l].h;
  // dh[j] = sum_l J(l,j)*H_l, the share-reallocation effect on avg H.
  const Eigen::VectorXd dh = jac.transpose() * h;

  const double wtp = d.theta / d.alpha;
  Eigen::VectorXd g(n);
  for (int j = 0; j < n; ++j) {
    const double cp = cost_prime(scenario.cost, scenario.products[j].h);
    g[j] = -cp * s[j] - wtp * s[j] + (d.rho - 1.0) * wtp * dh[j] -
           d.zeta * s[j] - d.zeta * dh[j];
  }
  return g;
}

double foc_residual(const Scenario& scenario, int j) {
  require_valid(scenario);
  if (j < 0 || j >= scenario.size())
    throw std::out_of_range("foc_residual: product index out of range");
  const auto& d = scenario.domain;
  const Eigen::VectorXd s = shares(scenario);
  if (s[j] < 1e-300)
    throw std::domain_error("foc_residual: degenerate share at product " +
                            scenario.products[j].id);
  const Eigen::MatrixXd jac = share_jacobian(scenario);
  double dh = 0.0;
  for (int l = 0; l < scenario.size(); ++l)
    dh += jac(l, j) * scenario.products[l].h;
  const double wtp = d.theta / d.alpha;
  const double cp = cost_prime(scenario.cost, scenario.products[j].h);
  return -cp - wtp - d.zeta -
         (dh / s[j]) * (d.zeta - (d.rho - 1.0) * wtp);
}

}  // namespace llmw
