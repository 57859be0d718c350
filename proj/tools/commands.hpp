#pragma once

#include "output.hpp"

#include "polya/spectrum.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  long lo = 0;
  long hi = -1;
};

// Parses "A..B" (or a single "A"); throws UsageError when malformed or empty.
Range parse_range(const std::string& s);

struct RunConfig {
  polya::Kind kind = polya::Kind::Hemisphere;
  int n = 2;
  int p = 1;
  std::optional<Range> k_range;
  std::optional<Range> K_range;
  int bits = polya::RealCtx::kDefaultBits;
  std::optional<double> tol;
  Format format = Format::csv;
  std::string out;
  int jobs = 1;
  std::vector<std::string> names;
  std::string certificate;  // qn | qtheta | mr
  int order = 3;            // truncation order l for mr

  polya::Manifold manifold() const;
  polya::RealCtx ctx() const;
};

struct Outcome {
  Table table;
  int exit_code = 0;
};

Outcome cmd_spectrum(const RunConfig& c);
Outcome cmd_check_polya(const RunConfig& c);
Outcome cmd_bounds(const RunConfig& c);
Outcome cmd_certify(const RunConfig& c);
Outcome cmd_averages(const RunConfig& c);
Outcome cmd_scan_theta(const RunConfig& c);
Outcome cmd_wedge(const RunConfig& c);

}  // namespace cli
