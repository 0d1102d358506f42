#pragma once

#include <random>

#include "llmw/scenario.hpp"

namespace llmw {

/// Deterministic random valid scenario for self-checks and property tests.
/// Product count drawn uniformly from [l_min, l_max]; H kept margin away
/// from the cost-domain bounds so finite differences stay in range.
Scenario random_scenario(std::mt19937& rng, int l_min = 1, int l_max = 10,
                         double h_margin = 1e-3);

}  // namespace llmw
