#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "llmw/scenario.hpp"

namespace llmw {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  std::vector<std::string> violations;
  explicit ValidationError(std::vector<std::string> v);
};

/// Parses and validates a scenario file. Throws ParseError on I/O or JSON
/// trouble, ValidationError carrying every violation otherwise.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);

/// Shortest representation that round-trips the double exactly (17
/// significant digits).
std::string format_double(double x);

}  // namespace llmw
