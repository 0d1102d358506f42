#pragma once

#include <string>

namespace llmw {

enum class CostFamily { Inverse, Log, Exp };

std::string to_string(CostFamily family);

/// Development cost of reaching hallucination level h, c(h), restricted to
/// [h_lo, h_hi]. All families are strictly decreasing and strictly convex
/// on the valid domain.
///   Inverse: c(h) = a + b/h
///   Log:     c(h) = a - b*ln(h)
///   Exp:     c(h) = a*exp(-b*h), a > 0
struct CostModel {
  CostFamily family = CostFamily::Inverse;
  double a = 1.0;
  double b = 1.0;
  double h_lo = 0.01;
  double h_hi = 1.0;
};

double cost(const CostModel& model, double h);
double cost_prime(const CostModel& model, double h);
double cost_second(const CostModel& model, double h);

}  // namespace llmw
