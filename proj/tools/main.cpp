#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "llmw/choice.hpp"
#include "llmw/io.hpp"
#include "llmw/oracle.hpp"
#include "llmw/policy.hpp"
#include "llmw/selfcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string scenario_path;
  std::string out_path;
  std::optional<double> cap;
  std::optional<double> tol;
  std::string grid_spec;
  unsigned seed = 0;
};

// START:STOP:COUNT, inclusive endpoints
std::vector<double> parse_grid(const std::string& spec) {
  double start = 0, stop = 0;
  int count = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' ||
      count < 1)
    throw std::invalid_argument("bad grid spec '" + spec +
                                "', expected START:STOP:COUNT");
  std::vector<double> grid;
  if (count == 1) {
    grid.push_back(start);
  } else {
    for (int i = 0; i < count; ++i)
      grid.push_back(start + (stop - start) * i / (count - 1));
  }
  return grid;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw llmw::ParseError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string fd(double x) { return llmw::format_double(x); }

void emit_decomposition_row(std::ostream& os, double cap,
                            const llmw::DecompositionReport& r) {
  os << fd(cap) << ',' << fd(r.delta_nw) << ',' << fd(r.comp_i) << ','
     << fd(r.comp_ii) << ',' << fd(r.comp_iii) << ',' << fd(r.avg_h_before)
     << ',' << fd(r.avg_h_after) << ',' << (r.avg_h_decreased ? 1 : 0)
     << '\n';
}

constexpr const char* kDecompositionHeader =
    "cap,delta_nw,comp_i,comp_ii,comp_iii,avg_h_before,avg_h_after,"
    "avg_h_decreased";

int cmd_validate(const Options& opt) {
  llmw::load_scenario(opt.scenario_path);
  Output out(opt.out_path);
  out.stream() << "status\nok\n";
  return kExitOk;
}

int cmd_shares(const Options& opt) {
  const llmw::Scenario s = llmw::load_scenario(opt.scenario_path);
  const Eigen::VectorXd v = llmw::decision_utilities(s);
  const Eigen::VectorXd vt = llmw::experienced_utilities(s);
  const Eigen::VectorXd sh = llmw::shares_from_utilities(v);
  Output out(opt.out_path);
  out.stream() << "id,h,price,v,v_tilde,s\n";
  for (int l = 0; l < s.size(); ++l) {
    const auto& p = s.products[l];
    out.stream() << p.id << ',' << fd(p.h) << ',' << fd(llmw::price(p, s.cost))
                 << ',' << fd(v[l]) << ',' << fd(vt[l]) << ',' << fd(sh[l])
                 << '\n';
  }
  return kExitOk;
}

int cmd_welfare(const Options& opt) {
  const llmw::Scenario s = llmw::load_scenario(opt.scenario_path);
  const llmw::WelfareReport r = llmw::net_welfare(s);
  Output out(opt.out_path);
  out.stream() << "cs,externality,nw,avg_h\n"
               << fd(r.cs) << ',' << fd(r.externality) << ',' << fd(r.nw)
               << ',' << fd(r.avg_h) << '\n';
  return kExitOk;
}

int cmd_mandate(const Options& opt) {
  const llmw::Scenario s = llmw::load_scenario(opt.scenario_path);
  const llmw::MandateSolution closed =
      llmw::perfect_info_mandate(s.domain, s.cost);
  const llmw::MandateSolution uniform = llmw::optimal_uniform_mandate(s);
  Output out(opt.out_path);
  out.stream() << "solver,h_star,residual,method,iterations,clamped\n"
               << "perfect-info," << fd(closed.h_star) << ','
               << fd(closed.residual) << ',' << llmw::to_string(closed.method)
               << ',' << closed.iterations << ',' << (closed.clamped ? 1 : 0)
               << '\n'
               << "uniform," << fd(uniform.h_star) << ','
               << fd(uniform.residual) << ',' << llmw::to_string(uniform.method)
               << ',' << uniform.iterations << ',' << (uniform.clamped ? 1 : 0)
               << '\n';
  return kExitOk;
}

int cmd_optimize(const Options& opt) {
  const llmw::Scenario s = llmw::load_scenario(opt.scenario_path);
  const double tol = opt.tol.value_or(1e-8);
  const llmw::OptimumResult r =
      llmw::unconstrained_optimum_multistart(s, 5, opt.seed, tol);
  Output out(opt.out_path);
  out.stream() << "id,h_opt,grad_inf_norm,converged\n";
  for (int l = 0; l < s.size(); ++l)
    out.stream() << s.products[l].id << ',' << fd(r.h[l]) << ','
                 << fd(r.grad_inf_norm) << ',' << (r.converged ? 1 : 0)
                 << '\n';
  return r.converged ? kExitOk : kExitNumeric;
}

int cmd_apply_standard(const Options& opt) {
  const llmw::Scenario s = llmw::load_scenario(opt.scenario_path);
  if (!opt.cap) throw std::invalid_argument("--cap is required");
  const llmw::StandardOutcome r = llmw::apply_standard(s, *opt.cap);
  Output out(opt.out_path);
  out.stream() << "id,h_bar,v_bar,s_bar,nw_bar\n";
  for (int l = 0; l < s.size(); ++l)
    out.stream() << s.products[l].id << ',' << fd(r.h_bar[l]) << ','
                 << fd(r.v_bar[l]) << ',' << fd(r.s_bar[l]) << ','
                 << fd(r.nw_bar) << '\n';
  return kExitOk;
}

int cmd_decompose(const Options& opt) {
  const llmw::Scenario s = llmw::load_scenario(opt.scenario_path);
  if (!opt.cap) throw std::invalid_argument("--cap is required");
  const llmw::DecompositionReport r = llmw::decompose(s, *opt.cap);
  Output out(opt.out_path);
  out.stream() << kDecompositionHeader << '\n';
  emit_decomposition_row(out.stream(), *opt.cap, r);
  return kExitOk;
}

int cmd_sweep(const Options& opt) {
  const llmw::Scenario s = llmw::load_scenario(opt.scenario_path);
  if (opt.grid_spec.empty()) throw std::invalid_argument("--grid is required");
  const auto rows = llmw::sweep_standard(s, parse_grid(opt.grid_spec));
  Output out(opt.out_path);
  out.stream() << kDecompositionHeader << '\n';
  for (const auto& [cap, rep] : rows)
    emit_decomposition_row(out.stream(), cap, rep);
  return kExitOk;
}

int cmd_selfcheck(const Options& opt) {
  const auto results = llmw::run_selfcheck(opt.seed);
  Output out(opt.out_path);
  out.stream() << "check,passed,worst\n";
  bool all_ok = true;
  for (const auto& r : results) {
    out.stream() << r.name << ',' << (r.passed ? 1 : 0) << ',' << fd(r.worst)
                 << '\n';
    all_ok = all_ok && r.passed;
  }
  return all_ok ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Welfare analysis of hallucination standards for LLM markets"};
  app.require_subcommand(1);

  Options opt;
  double cap_value = 0.0, tol_value = 0.0;

  auto add_common = [&](CLI::App* sub, bool needs_scenario = true) {
    if (needs_scenario)
      sub->add_option("--scenario", opt.scenario_path, "scenario JSON file")
          ->required();
    sub->add_option("--out", opt.out_path, "output path (default stdout)");
  };

  auto* validate = app.add_subcommand("validate", "check a scenario file");
  add_common(validate);
  auto* shares = app.add_subcommand("shares", "utilities and choice shares");
  add_common(shares);
  auto* welfare = app.add_subcommand("welfare", "consumer surplus and net welfare");
  add_common(welfare);
  auto* mandate = app.add_subcommand("mandate", "optimal hallucination mandate");
  add_common(mandate);
  auto* optimize =
      app.add_subcommand("optimize", "welfare-maximizing H vector");
  add_common(optimize);
  optimize->add_option("--tol", tol_value, "gradient tolerance");
  optimize->add_option("--seed", opt.seed, "multi-start seed");
  auto* apply =
      app.add_subcommand("apply-standard", "outcome under a maximum standard");
  add_common(apply);
  apply->add_option("--cap", cap_value, "standard cap")->required();
  auto* decompose =
      app.add_subcommand("decompose", "welfare change decomposition");
  add_common(decompose);
  decompose->add_option("--cap", cap_value, "standard cap")->required();
  auto* sweep = app.add_subcommand("sweep", "decomposition over a cap grid");
  add_common(sweep);
  sweep->add_option("--grid", opt.grid_spec, "cap grid START:STOP:COUNT")
      ->required();
  auto* selfcheck =
      app.add_subcommand("selfcheck", "oracle suite on randomized scenarios");
  add_common(selfcheck, /*needs_scenario=*/false);
  selfcheck->add_option("--seed", opt.seed, "randomization seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (apply->parsed() || decompose->parsed()) opt.cap = cap_value;
  if (optimize->parsed() && optimize->count("--tol")) opt.tol = tol_value;

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (shares->parsed()) return cmd_shares(opt);
    if (welfare->parsed()) return cmd_welfare(opt);
    if (mandate->parsed()) return cmd_mandate(opt);
    if (optimize->parsed()) return cmd_optimize(opt);
    if (apply->parsed()) return cmd_apply_standard(opt);
    if (decompose->parsed()) return cmd_decompose(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (selfcheck->parsed()) return cmd_selfcheck(opt);
  } catch (const llmw::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  } catch (const llmw::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitIo;
  } catch (const llmw::ConsistencyError& e) {
    std::cerr << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}
