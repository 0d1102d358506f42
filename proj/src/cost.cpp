#include "llmw/cost.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace llmw {

namespace {

void check_domain(const CostModel& model, double h) {
  if (h < model.h_lo || h > model.h_hi) {
    throw std::domain_error("cost: h=" + std::to_string(h) +
                            " outside [" + std::to_string(model.h_lo) + ", " +
                            std::to_string(model.h_hi) + "]");
  }
}

}  // namespace

std::string to_string(CostFamily family) {
  switch (family) {
    case CostFamily::Inverse: return "inverse";
    case CostFamily::Log: return "log";
    case CostFamily::Exp: return "exp";
  }
  return "?";
}

double cost(const CostModel& model, double h) {
  check_domain(model, h);
  switch (model.family) {
    case CostFamily::Inverse: return model.a + model.b / h;
    case CostFamily::Log: return model.a - model.b * std::log(h);
    case CostFamily::Exp: return model.a * std::exp(-model.b * h);
  }
  throw std::logic_error("cost: unknown family");
}

double cost_prime(const CostModel& model, double h) {
  check_domain(model, h);
  switch (model.family) {
    case CostFamily::Inverse: return -model.b / (h * h);
    case CostFamily::Log: return -model.b / h;
    case CostFamily::Exp:
      return -model.a * model.b * std::exp(-model.b * h);
  }
  throw std::logic_error("cost_prime: unknown family");
}

double cost_second(const CostModel& model, double h) {
  check_domain(model, h);
  switch (model.family) {
    case CostFamily::Inverse: return 2.0 * model.b / (h * h * h);
    case CostFamily::Log: return model.b / (h * h);
    case CostFamily::Exp:
      return model.a * model.b * model.b * std::exp(-model.b * h);
  }
  throw std::logic_error("cost_second: unknown family");
}

}  // namespace llmw
