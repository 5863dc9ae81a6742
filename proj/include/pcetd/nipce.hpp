#pragma once

//==============================================================================
// Non-intrusive PCE: run a deterministic solver as a black box once per
// sample and accumulate the basis projections
//   u_i(x,t) = sum_j w_j u(x,t,xi_j) P_i(xi_j),   i = 0..N'
// in a single pass, reusing each sample for every coefficient. Mean is u_0;
// variance is sum_{i>=1} u_i^2. A direct second-moment accumulator rides
// along for the Var = E[u^2] - E[u]^2 cross-check.
//==============================================================================

#include "pcetd/det_solvers.hpp"
#include "pcetd/models.hpp"
#include "pcetd/samplers.hpp"

#include <vector>

namespace pcetd {

struct ProjectionResult {
  std::vector<double> times;            // observation times
  std::vector<int> steps;               // observation step indices
  // coeff[t][i] is the i-th coefficient field at observation time t
  std::vector<std::vector<std::vector<double>>> coeff;
  std::vector<std::vector<double>> second_moment; // E[u^2] per time
  std::vector<std::vector<double>> mean_v;        // Gray-Scott only
  int sample_count = 0;
  int solver_runs = 0;
  SamplerKind sampler = SamplerKind::GaussQuadrature;

  const std::vector<double>& mean(std::size_t t) const { return coeff[t][0]; }
  std::vector<double> variance(std::size_t t) const;
};

/// Runs the chosen scheme once per sample; observation times are every
/// `obs_stride`-th step plus the final one. Solver failures abort the whole
/// run (dropping samples would bias the projection).
ProjectionResult nipce_run(const ModelSpec& spec, SchemeKind scheme,
                           const SampleSet& samples, int projection_degree,
                           const PeriodicGrid& grid, const TimeGrid& tg,
                           int obs_stride = 1, const SolverOptions& opts = {});

} // namespace pcetd
