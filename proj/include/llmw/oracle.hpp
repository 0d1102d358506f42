#pragma once

#include <Eigen/Dense>

#include "llmw/policy.hpp"

namespace llmw::oracle {

struct OracleConfig {
  double fd_step = 1e-5;          // central differences
  int grid_points_per_dim = 101;  // exhaustive grid resolution
  double tolerance = 1e-6;
};

/// Central-difference gradient of net_welfare in H, price moving through
/// c(.). Every H_l must sit at least fd_step inside the cost domain.
Eigen::VectorXd finite_diff_gradient(const Scenario& scenario,
                                     const OracleConfig& config = {});

struct GridSearchResult {
  Eigen::VectorXd argmax;
  double max_nw = 0.0;
};

/// Exhaustive tensor-grid evaluation of net_welfare over [h_lo, h_hi]^L.
/// Deliberately naive; L <= 3 enforced.
GridSearchResult grid_search_nw(const Scenario& scenario,
                                const OracleConfig& config = {});

struct RecomputedDecomposition {
  DecompositionReport report;     // from policy::decompose
  double independent_delta_nw;    // net_welfare(capped) - net_welfare(orig)
  double mismatch;                // independent delta minus I+II+III
};

/// Recomputes delta NW using only definitional net_welfare evaluations and
/// compares against the component sum from decompose.
RecomputedDecomposition recompute_decomposition(const Scenario& scenario,
                                                double cap);

}  // namespace llmw::oracle
