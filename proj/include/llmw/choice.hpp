#pragma once

#include <Eigen/Dense>

#include "llmw/scenario.hpp"

namespace llmw {

/// log(sum(exp(v))) with max-subtraction.
double log_sum_exp(const Eigen::VectorXd& v);

/// Deterministic decision utilities V_l = delta_l - alpha*(c(H_l)+omega_l)
/// - theta*rho*H_l, in product order.
Eigen::VectorXd decision_utilities(const Scenario& scenario);

/// Experienced utilities with awareness forced to 1:
/// Vt_l = delta_l - alpha*(c(H_l)+omega_l) - theta*H_l.
Eigen::VectorXd experienced_utilities(const Scenario& scenario);

/// Logit choice probabilities over decision utilities.
Eigen::VectorXd shares_from_utilities(const Eigen::VectorXd& v);
Eigen::VectorXd shares(const Scenario& scenario);

/// J(l,j) = d s_l / d H_j = s_l*(1{l=j} - s_j)*w_j with
/// w_j = -alpha*c'(H_j) - theta*rho (price moves along c).
Eigen::MatrixXd share_jacobian(const Scenario& scenario);

}  // namespace llmw
