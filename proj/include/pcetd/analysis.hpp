#pragma once

//==============================================================================
// Exact solutions of the linear model, relative L2 error, reference-solution
// management, and the experiment drivers that produce the error curves,
// M-sweeps, and runtime ratios behind the toolkit's output files.
//==============================================================================

#include "pcetd/det_solvers.hpp"
#include "pcetd/ipce_solvers.hpp"
#include "pcetd/models.hpp"
#include "pcetd/nipce.hpp"
#include "pcetd/samplers.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pcetd {

// --- exact solutions of the linear model ------------------------------------

/// E[u(x,t)] for u_t = D Lap u - K u, K ~ U[a,b], u0 = cos(pi x) (1D) or
/// cos(pi x1) cos(pi x2) (dim = 2, with 2 D pi^2 in the exponent). t = 0
/// returns the initial condition (analytic limit).
double exact_mean_linear(double x, double t, double a, double b, double D,
                         int dim = 1, double y = 0.0);
double exact_variance_linear(double x, double t, double a, double b, double D);

std::vector<double> exact_mean_linear_field(const PeriodicGrid& grid, double t,
                                            double a, double b, double D);
std::vector<double> exact_variance_linear_field(const PeriodicGrid& grid,
                                                double t, double a, double b,
                                                double D);

// --- error metric ------------------------------------------------------------

/// Discrete relative L2 error with uniform quadrature weight h per dimension.
/// Empty result when the reference norm vanishes (missing data point).
std::optional<double> rel_l2_error(std::span<const double> approx,
                                   std::span<const double> reference);

// --- error series ------------------------------------------------------------

struct ErrorSeries {
  std::string label;
  std::vector<double> times; // or M values for sweeps
  std::vector<double> errors;
  std::map<std::string, std::string> meta;
};

enum class StatKind { Mean, Variance };
const char* to_string(StatKind stat);

// --- reference solutions ------------------------------------------------------

/// Either the closed form (linear model) or a stored high-resolution
/// niPCE/GQ/ETDRK4 run; provenance travels with the object.
class ReferenceSolution {
public:
  enum class Kind { ExactClosedForm, NipceGq };

  static ReferenceSolution exact_linear(const ModelSpec& spec,
                                        const PeriodicGrid& grid);
  static ReferenceSolution nipce_gq(const ModelSpec& spec,
                                    const PeriodicGrid& grid, double T,
                                    int m_ref, int q_ref,
                                    int projection_degree = 10,
                                    const SolverOptions& opts = {});

  Kind kind() const { return kind_; }

  /// Mean/variance field at time t; empty when the reference does not cover t.
  std::optional<std::vector<double>> mean_at(double t) const;
  std::optional<std::vector<double>> variance_at(double t) const;

  std::map<std::string, std::string> provenance() const;

private:
  ReferenceSolution() = default;
  std::optional<std::size_t> lookup(double t) const;

  Kind kind_ = Kind::ExactClosedForm;
  ModelSpec spec_;
  PeriodicGrid grid_{1, 4};
  double T_ = 0.0;
  int m_ref_ = 0, q_ref_ = 0, degree_ = 0;
  std::vector<double> times_;
  std::vector<std::vector<double>> mean_;
  std::vector<std::vector<double>> variance_;
};

// --- experiment drivers --------------------------------------------------------

/// One error curve per PCE degree in n_list (labels "N=1", ...).
std::vector<ErrorSeries>
ipce_error_curves(const ModelSpec& spec, SchemeKind scheme,
                  const PeriodicGrid& grid, const TimeGrid& tg, StatKind stat,
                  const std::vector<int>& n_list, const ReferenceSolution& ref,
                  int obs_stride = 1, const SolverOptions& opts = {});

/// One error curve per sampler (labels "MC", "QMC", "GQ"); the MC curve is the
/// mean of `mc_repeats` independent-seed runs.
std::vector<ErrorSeries>
nipce_error_curves(const ModelSpec& spec, SchemeKind scheme,
                   const PeriodicGrid& grid, const TimeGrid& tg, StatKind stat,
                   const std::vector<SamplerKind>& samplers, int q,
                   int projection_degree, std::uint64_t seed, int mc_repeats,
                   const ReferenceSolution& ref, int obs_stride = 1,
                   const SolverOptions& opts = {});

/// Final-time errors over a dyadic M list, iPCE (degree n_ipce) and niPCE/GQ
/// (q_nipce samples) for each scheme; series "times" hold the M values.
std::vector<ErrorSeries>
performance_sweep(const ModelSpec& spec, const std::vector<SchemeKind>& schemes,
                  const PeriodicGrid& grid, double T,
                  const std::vector<int>& m_list, int n_ipce, int q_nipce,
                  const ReferenceSolution& ref,
                  const SolverOptions& opts = {});

// --- runtime ratios -------------------------------------------------------------

/// Reaction-term contraction count per right-hand-side evaluation, the
/// machine-independent stand-in for wall-clock tables: (N+1)^2 for the linear
/// model, (N+1)^3 quadratic, and the truncated-expansion summand count for
/// the cubic model.
std::int64_t contraction_op_count(ModelKind kind, int degree);

struct RuntimeReport {
  std::vector<int> n_values;
  std::vector<double> ratios; // wall-time relative to N = 0
  std::vector<std::int64_t> op_counts;
};

/// Average wall time of `repeats` identical iPCE runs per degree, normalized
/// to N = 0.
RuntimeReport runtime_ratio(const ModelSpec& spec, SchemeKind scheme,
                            int n_max, const PeriodicGrid& grid,
                            double T = 0.1, int M = 10, int repeats = 10,
                            const SolverOptions& opts = {});

} // namespace pcetd
