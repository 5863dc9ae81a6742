#pragma once

//==============================================================================
// Command-line front end: subcommand parsing/validation, reproduction presets
// for the toolkit's standard figures, and the drivers that emit their CSV
// sets. Exit statuses: 0 success, 1 numerical failure (blow-up), 2 usage
// error. The output directory defaults to ./out, overridable by the
// PCETD_OUT environment variable and the --out flag (in that order).
//==============================================================================

#include "pcetd/det_solvers.hpp"
#include "pcetd/models.hpp"
#include "pcetd/samplers.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcetd {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// --help was given; help text has already been printed (exit 0).
class HelpRequested : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  ModelKind model = ModelKind::Linear;
  SchemeKind scheme = SchemeKind::Etdrk4;
  double D = 0.0;
  int dim = 1;
  int p = 128;
  int M = 100;
  double T = 2.0;
  std::vector<int> n_list = {1, 2, 3, 4, 5};
  SamplerKind sampler = SamplerKind::GaussQuadrature;
  int q = 50;
  int n_prime = 10;
  double a = 1.0, b = 2.0;
  double xi = 1.5;
  std::uint64_t seed = 1;
  int mc_repeats = 10;
  std::string out_dir;
  int contour_points = 32;
  DealiasRule dealias = DealiasRule::TwoThirds;
  bool desk = false;
  bool gs_vinit_squared = false;
  bool variance = false;
  std::string preset; // reproduce subcommand
  int ref_m = 1000;
  int ref_q = 200;

  SolverOptions solver_options() const {
    SolverOptions o;
    o.contour_points = contour_points;
    o.dealias = dealias;
    return o;
  }
  ModelSpec model_spec() const;
};

/// Parse argv (excluding the program name is fine too; pass exactly what main
/// received). Throws UsageError for unknown flags, missing values, or
/// inconsistent combinations.
RunConfig parse_and_validate(const std::vector<std::string>& args);

/// Table of per-figure defaults (time-step counts per scheme and mode).
struct PresetSchemeSteps {
  int m_ipce = 0;
  int m_nipce = 0;
};
struct Preset {
  std::string name;
  ModelKind model = ModelKind::Linear;
  double D = 0.0;
  int dim = 1;
  double T = 2.0;
  int p = 128;
  int q = 50;
  std::map<SchemeKind, PresetSchemeSteps> steps;
  bool variance = false;
};
const Preset& preset_by_name(const std::string& name);
std::vector<std::string> preset_names();

/// Full entry point used by the binary; returns the process exit status.
int cli_main(int argc, char** argv);

} // namespace pcetd
