#include "llmw/oracle.hpp"

#include <stdexcept>

namespace llmw::oracle {

namespace {

Scenario with_h_at(const Scenario& scenario, int j, double h) {
  Scenario out = scenario;
  out.products[j].h = h;
  return out;
}

}  // namespace

Eigen::VectorXd finite_diff_gradient(const Scenario& scenario,
                                     const OracleConfig& config) {
  require_valid(scenario);
  const double step = config.fd_step;
  if (!(step > 0.0))
    throw std::invalid_argument("finite_diff_gradient: fd_step must be > 0");
  for (const auto& p : scenario.products) {
    if (p.h - step < scenario.cost.h_lo || p.h + step > scenario.cost.h_hi)
      throw std::domain_error("finite_diff_gradient: product '" + p.id +
                              "' too close to cost-domain bound for step");
  }
  const int n = scenario.size();
  Eigen::VectorXd g(n);
  for (int j = 0; j < n; ++j) {
    const double h = scenario.products[j].h;
    const double up = net_welfare(with_h_at(scenario, j, h + step)).nw;
    const double dn = net_welfare(with_h_at(scenario, j, h - step)).nw;
    g[j] = (up - dn) / (2.0 * step);
  }
  return g;
}

GridSearchResult grid_search_nw(const Scenario& scenario,
                                const OracleConfig& config) {
  require_valid(scenario);
  const int n = scenario.size();
  if (n > 3)
    throw std::invalid_argument("grid_search_nw: L > 3 not supported");
  const int k = config.grid_points_per_dim;
  if (k < 2)
    throw std::invalid_argument("grid_search_nw: need at least 2 grid points");

  const double lo = scenario.cost.h_lo, hi = scenario.cost.h_hi;
  auto node = [&](int i) { return lo + (hi - lo) * i / (k - 1); };

  GridSearchResult best;
  best.argmax.resize(n);
  best.max_nw = -std::numeric_limits<double>::infinity();

  Scenario probe = scenario;
  std::vector<int> idx(n, 0);
  while (true) {
    for (int j = 0; j < n; ++j) probe.products[j].h = node(idx[j]);
    const double nw = net_welfare(probe).nw;
    if (nw > best.max_nw) {
      best.max_nw = nw;
      for (int j = 0; j < n; ++j) best.argmax[j] = probe.products[j].h;
    }
    int j = 0;
    for (; j < n; ++j) {
      if (++idx[j] < k) break;
      idx[j] = 0;
    }
    if (j == n) break;
  }
  return best;
}

RecomputedDecomposition recompute_decomposition(const Scenario& scenario,
                                                double cap) {
  RecomputedDecomposition out;
  out.report = decompose(scenario, cap);
  const double before = net_welfare(scenario).nw;
  const double after = net_welfare(capped_scenario(scenario, cap)).nw;
  out.independent_delta_nw = after - before;
  out.mismatch = out.independent_delta_nw -
                 (out.report.comp_i + out.report.comp_ii + out.report.comp_iii);
  return out;
}

}  // namespace llmw::oracle
