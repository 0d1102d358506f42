#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "llmw/scenario.hpp"

namespace llmw {

/// Two internally consistent computation paths disagreed beyond tolerance;
/// signals an implementation bug, not bad input.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WelfareReport {
  double cs = 0.0;           // consumer surplus, money units
  double externality = 0.0;  // zeta * avg_h
  double nw = 0.0;           // cs - externality
  double avg_h = 0.0;        // share-weighted hallucination rate
};

/// CS = (1/alpha)*[logsumexp(V) + sum_l s_l*(Vt_l - V_l)], constant of
/// integration omitted.
double consumer_surplus(const Scenario& scenario);

/// NW = CS - zeta*sum_l s_l*H_l, cross-checked against the explicit form
/// (1/alpha)*[logsumexp(V) + (rho-1)*theta*sum s_l H_l] - zeta*sum s_l H_l.
/// Throws ConsistencyError if the two disagree beyond 1e-10 (scaled).
WelfareReport net_welfare(const Scenario& scenario);

/// Analytic gradient g_j = dNW/dH_j:
/// g_j = -c'(H_j)*s_j - (theta/alpha)*s_j
///       + (rho-1)*(theta/alpha)*sum_l J(l,j)*H_l
///       - zeta*s_j - zeta*sum_l J(l,j)*H_l.
Eigen::VectorXd nw_gradient(const Scenario& scenario);

/// Residual of the per-product first-order condition; zero iff the FOC holds
/// at product j. Equals g_j / s_j. Throws std::domain_error when s_j is
/// numerically zero.
double foc_residual(const Scenario& scenario, int j);

}  // namespace llmw
