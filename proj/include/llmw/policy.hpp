#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "llmw/welfare.hpp"

namespace llmw {

enum class SolveMethod { ClosedForm, Newton, Bisection };

std::string to_string(SolveMethod method);

struct MandateSolution {
  double h_star = 0.0;
  double residual = 0.0;  // -c'(h_star) - theta/alpha - zeta
  SolveMethod method = SolveMethod::ClosedForm;
  int iterations = 0;
  bool clamped = false;
};

struct StandardOutcome {
  Eigen::VectorXd h_bar;  // min(H_l, cap)
  Eigen::VectorXd v_bar;  // decision utilities under the standard
  Eigen::VectorXd s_bar;  // shares under the standard
  double nw_bar = 0.0;
};

struct DecompositionReport {
  double comp_i = 0.0;    // choice-set value change
  double comp_ii = 0.0;   // misperception-wedge change
  double comp_iii = 0.0;  // externality change
  double delta_nw = 0.0;
  double avg_h_before = 0.0;
  double avg_h_after = 0.0;
  bool avg_h_decreased = false;
};

struct OptimumResult {
  Eigen::VectorXd h;
  double grad_inf_norm = 0.0;  // projected gradient at the returned point
  int iterations = 0;
  bool converged = false;
};

/// Solves -c'(H) = theta/alpha + zeta in closed form per family, clamped to
/// [h_lo, h_hi] with the clamped flag set when no interior root exists.
MandateSolution perfect_info_mandate(const DomainParams& domain,
                                     const CostModel& model);

/// Bisection root of -c'(H) - m on [h_lo, h_hi]; verifier for the closed
/// forms. Returns a corner with clamped=true when the bracket has no sign
/// change.
MandateSolution mandate_bisection(const CostModel& model, double m,
                                  double tol = 1e-14);

/// Maximizes NW over one common H applied to all products: golden-section
/// on [h_lo, h_hi], then Newton polish driven by the summed nw_gradient.
MandateSolution optimal_uniform_mandate(const Scenario& scenario,
                                        int max_iterations = 200);

/// Projected gradient ascent on NW over [h_lo, h_hi]^L starting from the
/// scenario's current H. converged=false after max_iterations reports the
/// best iterate and its projected gradient norm.
OptimumResult unconstrained_optimum(const Scenario& scenario,
                                    double tol = 1e-8,
                                    int max_iterations = 2000);

/// Multi-start variant probing uniqueness: the scenario's own H plus
/// deterministic pseudo-random starts. Returns the best limit found.
OptimumResult unconstrained_optimum_multistart(const Scenario& scenario,
                                               int starts = 5,
                                               unsigned seed = 0,
                                               double tol = 1e-8,
                                               int max_iterations = 2000);

/// Caps every product at H_bar_l = min(H_l, cap); prices follow c(.) with
/// markups unchanged. Throws std::domain_error if cap is outside the cost
/// domain.
StandardOutcome apply_standard(const Scenario& scenario, double cap);

Scenario capped_scenario(const Scenario& scenario, double cap);

/// Splits nw(capped) - nw(original) into the three components:
///   I   = (1/alpha)*ln(sum exp(Vbar) / sum exp(V))
///   II  = (rho-1)*(theta/alpha)*[sum sbar*Hbar - sum s*H]
///   III = -zeta*[sum sbar*Hbar - sum s*H]
/// and asserts I+II+III == delta_nw within 1e-10.
DecompositionReport decompose(const Scenario& scenario, double cap);

/// One decomposition per cap, caps evaluated independently, echoed in input
/// order. Grid must be nonempty, strictly increasing, within the cost
/// domain.
std::vector<std::pair<double, DecompositionReport>> sweep_standard(
    const Scenario& scenario, const std::vector<double>& grid);

}  // namespace llmw
