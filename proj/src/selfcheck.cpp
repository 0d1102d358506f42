#include "llmw/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "llmw/choice.hpp"
#include "llmw/oracle.hpp"
#include "llmw/policy.hpp"
#include "llmw/random.hpp"

namespace llmw {

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

CheckResult check_shares(std::mt19937& rng) {
  CheckResult r{"shares-sum-and-translation", true, 0.0, ""};
  for (int i = 0; i < 100; ++i) {
    Scenario s = random_scenario(rng, 1, 20);
    const Eigen::VectorXd sh = shares(s);
    r.worst = std::max(r.worst, std::abs(sh.sum() - 1.0));
    Scenario shifted = s;
    for (auto& p : shifted.products) p.delta += 37.5;
    r.worst = std::max(
        r.worst, (shares(shifted) - sh).lpNorm<Eigen::Infinity>());
  }
  r.passed = r.worst < 1e-12;
  return r;
}

CheckResult check_gradient(std::mt19937& rng) {
  CheckResult r{"gradient-vs-finite-differences", true, 0.0, ""};
  for (int i = 0; i < 50; ++i) {
    Scenario s = random_scenario(rng, 1, 8);
    const Eigen::VectorXd g = nw_gradient(s);
    const Eigen::VectorXd fd = oracle::finite_diff_gradient(s);
    for (int j = 0; j < s.size(); ++j)
      r.worst = std::max(r.worst, rel_err(g[j], fd[j]));
  }
  r.passed = r.worst < 1e-6;
  return r;
}

CheckResult check_foc_at_mandate(std::mt19937& rng) {
  CheckResult r{"foc-zero-at-uniform-mandate", true, 0.0, ""};
  for (int i = 0; i < 50; ++i) {
    Scenario s = random_scenario(rng, 1, 8);
    const MandateSolution sol = perfect_info_mandate(s.domain, s.cost);
    if (sol.clamped) continue;
    for (auto& p : s.products) p.h = sol.h_star;
    for (int j = 0; j < s.size(); ++j)
      r.worst = std::max(r.worst, std::abs(foc_residual(s, j)));
  }
  r.passed = r.worst < 1e-8;
  return r;
}

CheckResult check_mandate_solver(std::mt19937& rng) {
  CheckResult r{"closed-form-vs-bisection", true, 0.0, ""};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    Scenario s = random_scenario(rng, 1, 1);
    const double m = s.domain.theta / s.domain.alpha + s.domain.zeta;
    const MandateSolution cf = perfect_info_mandate(s.domain, s.cost);
    const MandateSolution bi = mandate_bisection(s.cost, m);
    r.worst = std::max(r.worst, std::abs(cf.h_star - bi.h_star));
  }
  r.passed = r.worst < 1e-10;
  return r;
}

CheckResult check_decomposition(std::mt19937& rng) {
  CheckResult r{"decomposition-identity", true, 0.0, ""};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    Scenario s = random_scenario(rng, 1, 8);
    const double cap =
        s.cost.h_lo + (s.cost.h_hi - s.cost.h_lo) * unit(rng);
    const auto rec = oracle::recompute_decomposition(s, cap);
    r.worst = std::max(r.worst, std::abs(rec.mismatch));
  }
  r.passed = r.worst < 1e-10;
  return r;
}

CheckResult check_grid_search(std::mt19937& rng) {
  CheckResult r{"optimizer-vs-grid-search", true, 0.0, ""};
  oracle::OracleConfig cfg;
  for (int i = 0; i < 5; ++i) {
    Scenario s = random_scenario(rng, 1, 2);
    const auto grid = oracle::grid_search_nw(s, cfg);
    const OptimumResult opt = unconstrained_optimum_multistart(s);
    const double opt_nw = [&] {
      Scenario t = s;
      for (int l = 0; l < t.size(); ++l) t.products[l].h = opt.h[l];
      return net_welfare(t).nw;
    }();
    // the optimizer must do at least as well as the grid, up to grid error
    const double slack =
        std::abs(grid.max_nw) * 1e-9 + 1e-4;
    r.worst = std::max(r.worst, grid.max_nw - opt_nw);
    if (grid.max_nw - opt_nw > slack) r.passed = false;
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<CheckResult> out;
  out.push_back(check_shares(rng));
  out.push_back(check_gradient(rng));
  out.push_back(check_foc_at_mandate(rng));
  out.push_back(check_mandate_solver(rng));
  out.push_back(check_decomposition(rng));
  out.push_back(check_grid_search(rng));
  return out;
}

}  // namespace llmw
