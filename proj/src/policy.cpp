#include "llmw/policy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "llmw/choice.hpp"

namespace llmw {

namespace {

Scenario uniform_scenario(const Scenario& scenario, double h) {
  Scenario out = scenario;
  for (auto& p : out.products) p.h = h;
  return out;
}

double foc_marginal(const DomainParams& domain) {
  return domain.theta / domain.alpha + domain.zeta;
}

// Summed welfare gradient at a common H; reduces to -c'(H) - m because the
// share-reallocation terms cancel at a uniform point.
double uniform_slope(const Scenario& scenario, double h) {
  return nw_gradient(uniform_scenario(scenario, h)).sum();
}

}  // namespace

std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::ClosedForm: return "closed-form";
    case SolveMethod::Newton: return "newton";
    case SolveMethod::Bisection: return "bisection";
  }
  return "?";
}

MandateSolution perfect_info_mandate(const DomainParams& domain,
                                     const CostModel& model) {
  const double m = foc_marginal(domain);
  MandateSolution sol;
  sol.method = SolveMethod::ClosedForm;

  double h_star;
  bool interior = true;
  if (m <= 0.0) {
    // -c' > 0 everywhere: welfare strictly increasing in H, corner at h_hi.
    h_star = model.h_hi;
    interior = false;
  } else {
    switch (model.family) {
      case CostFamily::Inverse:
        h_star = std::sqrt(model.b / m);
        break;
      case CostFamily::Log:
        h_star = model.b / m;
        break;
      case CostFamily::Exp: {
        const double arg = model.a * model.b / m;
        if (arg <= 1.0) {
          // formula root would be <= 0: slope negative on the whole domain
          h_star = model.h_lo;
          interior = false;
        } else {
          h_star = std::log(arg) / model.b;
        }
        break;
      }
      default:
        throw std::logic_error("perfect_info_mandate: unknown family");
    }
  }

  if (h_star < model.h_lo) {
    h_star = model.h_lo;
    interior = false;
  } else if (h_star > model.h_hi) {
    h_star = model.h_hi;
    interior = false;
  }

  sol.h_star = h_star;
  sol.clamped = !interior;
  sol.residual = -cost_prime(model, h_star) - m;
  return sol;
}

MandateSolution mandate_bisection(const CostModel& model, double m,
                                  double tol) {
  MandateSolution sol;
  sol.method = SolveMethod::Bisection;

  auto f = [&](double h) { return -cost_prime(model, h) - m; };
  double lo = model.h_lo, hi = model.h_hi;
  const double f_lo = f(lo), f_hi = f(hi);
  // f is strictly decreasing for every family
  if (f_lo <= 0.0) {
    sol.h_star = lo;
    sol.clamped = true;
    sol.residual = f_lo;
    return sol;
  }
  if (f_hi >= 0.0) {
    sol.h_star = hi;
    sol.clamped = true;
    sol.residual = f_hi;
    return sol;
  }
  int iters = 0;
  while (hi - lo > tol && iters < 200) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
    ++iters;
  }
  sol.h_star = 0.5 * (lo + hi);
  sol.iterations = iters;
  sol.residual = f(sol.h_star);
  return sol;
}

MandateSolution optimal_uniform_mandate(const Scenario& scenario,
                                        int max_iterations) {
  require_valid(scenario);
  const auto& model = scenario.cost;
  const double m = foc_marginal(scenario.domain);

  MandateSolution sol;
  sol.method = SolveMethod::Newton;

  // corner checks first: the uniform slope is monotone decreasing in H
  if (uniform_slope(scenario, model.h_hi) >= 0.0) {
    sol.h_star = model.h_hi;
    sol.clamped = true;
    sol.residual = -cost_prime(model, sol.h_star) - m;
    return sol;
  }
  if (uniform_slope(scenario, model.h_lo) <= 0.0) {
    sol.h_star = model.h_lo;
    sol.clamped = true;
    sol.residual = -cost_prime(model, sol.h_star) - m;
    return sol;
  }

  // golden-section bracketing of the uniform-H welfare maximum
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = model.h_lo, hi = model.h_hi;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = net_welfare(uniform_scenario(scenario, x1)).nw;
  double f2 = net_welfare(uniform_scenario(scenario, x2)).nw;
  int iters = 0;
  while (hi - lo > 1e-4 && iters < max_iterations) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = net_welfare(uniform_scenario(scenario, x2)).nw;
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = net_welfare(uniform_scenario(scenario, x1)).nw;
    }
    ++iters;
  }

  // Newton polish on the summed gradient; its slope is -c''(H)
  double h = 0.5 * (lo + hi);
  bool converged = false;
  for (; iters < max_iterations; ++iters) {
    const double slope = uniform_slope(scenario, h);
    if (std::abs(slope) < 1e-13) {
      converged = true;
      break;
    }
    double h_next = h + slope / cost_second(model, h);
    h_next = std::clamp(h_next, model.h_lo, model.h_hi);
    if (std::abs(h_next - h) < 1e-15 * std::max(1.0, std::abs(h))) {
      h = h_next;
      converged = true;
      break;
    }
    h = h_next;
  }
  if (!converged)
    throw std::runtime_error(
        "optimal_uniform_mandate: no convergence after " +
        std::to_string(max_iterations) + " iterations");

  sol.h_star = h;
  sol.iterations = iters;
  sol.residual = -cost_prime(model, h) - m;
  return sol;
}

namespace {

Eigen::VectorXd project_box(Eigen::VectorXd x, double lo, double hi) {
  for (int i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lo, hi);
  return x;
}

Eigen::VectorXd projected_gradient(const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& g, double lo,
                                   double hi) {
  Eigen::VectorXd pg = g;
  for (int i = 0; i < x.size(); ++i) {
    if ((x[i] <= lo && g[i] < 0.0) || (x[i] >= hi && g[i] > 0.0)) pg[i] = 0.0;
  }
  return pg;
}

Scenario with_h(const Scenario& scenario, const Eigen::VectorXd& h) {
  Scenario out = scenario;
  for (int l = 0; l < out.size(); ++l) out.products[l].h = h[l];
  return out;
}

}  // namespace

OptimumResult unconstrained_optimum(const Scenario& scenario, double tol,
                                    int max_iterations) {
  require_valid(scenario);
  const double lo = scenario.cost.h_lo, hi = scenario.cost.h_hi;
  const int n = scenario.size();

  Eigen::VectorXd x(n);
  for (int l = 0; l < n; ++l) x[l] = scenario.products[l].h;
  double f = net_welfare(with_h(scenario, x)).nw;
  Eigen::VectorXd g = nw_gradient(with_h(scenario, x));

  OptimumResult best;
  best.h = x;
  best.grad_inf_norm = projected_gradient(x, g, lo, hi).lpNorm<Eigen::Infinity>();

  Eigen::VectorXd x_prev = x, g_prev = g;
  double step = 1.0 / std::max(1.0, g.lpNorm<Eigen::Infinity>());

  for (int iter = 0; iter < max_iterations; ++iter) {
    const Eigen::VectorXd pg = projected_gradient(x, g, lo, hi);
    const double pg_norm = pg.lpNorm<Eigen::Infinity>();
    if (pg_norm < best.grad_inf_norm) {
      best.h = x;
      best.grad_inf_norm = pg_norm;
    }
    if (pg_norm < tol) {
      best.h = x;
      best.grad_inf_norm = pg_norm;
      best.iterations = iter;
      best.converged = true;
      return best;
    }

    if (iter > 0) {
      // Barzilai-Borwein step (ascent convention)
      const Eigen::VectorXd s = x - x_prev;
      const Eigen::VectorXd y = g_prev - g;
      const double sy = s.dot(y);
      step = (sy > 1e-16) ? s.squaredNorm() / sy : 1.0;
      step = std::clamp(step, 1e-12, 1e6);
    }

    // Armijo backtracking along the projected arc
    double t = step;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      const Eigen::VectorXd x_new = project_box(x + t * g, lo, hi);
      const Eigen::VectorXd d = x_new - x;
      if (d.lpNorm<Eigen::Infinity>() < 1e-18) break;
      const double f_new = net_welfare(with_h(scenario, x_new)).nw;
      if (f_new >= f + 1e-4 * g.dot(d)) {
        x_prev = x;
        g_prev = g;
        x = x_new;
        f = f_new;
        g = nw_gradient(with_h(scenario, x));
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) {
      best.iterations = iter;
      return best;  // stalled; caller inspects converged/grad_inf_norm
    }
  }
  best.iterations = max_iterations;
  return best;
}

OptimumResult unconstrained_optimum_multistart(const Scenario& scenario,
                                               int starts, unsigned seed,
                                               double tol,
                                               int max_iterations) {
  require_valid(scenario);
  const double lo = scenario.cost.h_lo, hi = scenario.cost.h_hi;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(lo, hi);

  OptimumResult best = unconstrained_optimum(scenario, tol, max_iterations);
  double best_nw = net_welfare(with_h(scenario, best.h)).nw;
  for (int k = 1; k < starts; ++k) {
    Scenario start = scenario;
    for (auto& p : start.products) p.h = unif(rng);
    OptimumResult r = unconstrained_optimum(start, tol, max_iterations);
    const double r_nw = net_welfare(with_h(scenario, r.h)).nw;
    if ((r.converged && !best.converged) ||
        (r.converged == best.converged && r_nw > best_nw)) {
      best = r;
      best_nw = r_nw;
    }
  }
  return best;
}

Scenario capped_scenario(const Scenario& scenario, double cap) {
  if (cap < scenario.cost.h_lo || cap > scenario.cost.h_hi)
    throw std::domain_error("cap outside cost domain");
  Scenario out = scenario;
  for (auto& p : out.products) p.h = std::min(p.h, cap);
  return out;
}

StandardOutcome apply_standard(const Scenario& scenario, double cap) {
  require_valid(scenario);
  const Scenario capped = capped_scenario(scenario, cap);
  StandardOutcome out;
  out.h_bar.resize(capped.size());
  for (int l = 0; l < capped.size(); ++l) out.h_bar[l] = capped.products[l].h;
  out.v_bar = decision_utilities(capped);
  out.s_bar = shares_from_utilities(out.v_bar);
  out.nw_bar = net_welfare(capped).nw;
  return out;
}

DecompositionReport decompose(const Scenario& scenario, double cap) {
  require_valid(scenario);
  const auto& d = scenario.domain;
  const Scenario capped = capped_scenario(scenario, cap);

  const Eigen::VectorXd v = decision_utilities(scenario);
  const Eigen::VectorXd v_bar = decision_utilities(capped);
  const Eigen::VectorXd s = shares_from_utilities(v);
  const Eigen::VectorXd s_bar = shares_from_utilities(v_bar);

  double avg_before = 0.0, avg_after = 0.0;
  for (int l = 0; l < scenario.size(); ++l) {
    avg_before += s[l] * scenario.products[l].h;
    avg_after += s_bar[l] * capped.products[l].h;
  }
  const double shift = avg_after - avg_before;

  DecompositionReport rep;
  rep.comp_i = (log_sum_exp(v_bar) - log_sum_exp(v)) / d.alpha;
  rep.comp_ii = (d.rho - 1.0) * (d.theta / d.alpha) * shift;
  rep.comp_iii = -d.zeta * shift;
  rep.delta_nw = net_welfare(capped).nw - net_welfare(scenario).nw;
  rep.avg_h_before = avg_before;
  rep.avg_h_after = avg_after;
  rep.avg_h_decreased = avg_after <= avg_before;

  const double gap =
      std::abs(rep.comp_i + rep.comp_ii + rep.comp_iii - rep.delta_nw);
  if (gap > 1e-10 * std::max(1.0, std::abs(rep.delta_nw)))
    throw ConsistencyError("decompose: I+II+III differs from delta NW by " +
                           std::to_string(gap));
  return rep;
}

std::vector<std::pair<double, DecompositionReport>> sweep_standard(
    const Scenario& scenario, const std::vector<double>& grid) {
  require_valid(scenario);
  if (grid.empty()) throw std::invalid_argument("sweep_standard: empty grid");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < scenario.cost.h_lo || grid[i] > scenario.cost.h_hi)
      throw std::domain_error("sweep_standard: cap outside cost domain");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument(
          "sweep_standard: grid must be strictly increasing");
  }
  std::vector<std::pair<double, DecompositionReport>> out;
  out.reserve(grid.size());
  for (double cap : grid) out.emplace_back(cap, decompose(scenario, cap));
  return out;
}

}  // namespace llmw
