#pragma once

// Flat key=value run configuration shared by every subcommand. Doubles are
// written with 17 significant digits so a save/load cycle is bit-exact.

#include <string>

#include "astau/calibration.hpp"

namespace astau::cli {

struct RunConfig {
  std::string method = "airy";
  double s = 0.0;
  double kappa = 0.5;
  int quad_order = 200;
  double eps = 0.5;
  double truncation = 16.0;
  int max_weight = 8;
  int n_cut = 8;
  double fd_step = 1e-2;
  double calibration = 0.0;
  std::string format = "text";  // text | json
  double s_min = -2.0;
  double s_max = 2.0;
  double step = 0.5;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string serialize(const RunConfig& cfg);
/// Unknown keys, malformed numbers and duplicate keys are ArgumentErrors.
/// Keys absent from the text keep the values already in `base`.
RunConfig parse_config(const std::string& text, RunConfig base = {});

RunConfig load_config(const std::string& path, RunConfig base = {});
/// Writes via a temporary file and rename.
void save_config(const std::string& path, const RunConfig& cfg);

/// Range checks against the preconditions of the operations each field feeds.
void validate(const RunConfig& cfg);

PipelineConfig to_pipeline(const RunConfig& cfg);

std::string format_double(double v);

}  // namespace astau::cli
