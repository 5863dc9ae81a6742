#include "pcetd/nipce.hpp"

#include "pcetd/errors.hpp"
#include "pcetd/kernels.hpp"
#include "pcetd/legendre.hpp"

#include <string>

namespace pcetd {

std::vector<double> ProjectionResult::variance(std::size_t t) const {
  const auto& c = coeff[t];
  std::vector<double> var(c[0].size(), 0.0);
  for (std::size_t i = 1; i < c.size(); ++i)
    kernels::mul2_add(1.0, c[i], c[i], var);
  return var;
}

ProjectionResult nipce_run(const ModelSpec& spec, SchemeKind scheme,
                           const SampleSet& samples, int projection_degree,
                           const PeriodicGrid& grid, const TimeGrid& tg,
                           int obs_stride, const SolverOptions& opts) {
  if (projection_degree < 0)
    throw InvalidArgument("nipce_run: projection degree must be >= 0");
  if (obs_stride < 1) throw InvalidArgument("nipce_run: obs_stride >= 1");
  const int q = static_cast<int>(samples.points.size());
  const int nc = projection_degree + 1;
  const std::size_t n = grid.size();

  ProjectionResult result;
  result.sampler = samples.kind;
  result.sample_count = q;
  for (int step = 0; step <= tg.M; ++step) {
    if (step % obs_stride == 0 || step == tg.M) {
      result.steps.push_back(step);
      result.times.push_back(tg.t(step));
    }
  }
  const std::size_t nobs = result.steps.size();
  result.coeff.assign(nobs, std::vector<std::vector<double>>(
                                nc, std::vector<double>(n, 0.0)));
  result.second_moment.assign(nobs, std::vector<double>(n, 0.0));
  if (is_gray_scott(spec.kind))
    result.mean_v.assign(nobs, std::vector<double>(n, 0.0));

  const LegendreBasis basis(spec.a, spec.b, projection_degree);

  for (int j = 0; j < q; ++j) {
    const double xi = samples.points[j];
    const double w = samples.weights[j];
    const auto pvals = basis.eval(xi);
    std::size_t obs_cursor = 0;
    auto observer = [&](int step, double /*t*/, const FieldState& state) {
      if (obs_cursor < nobs && result.steps[obs_cursor] == step) {
        auto& c = result.coeff[obs_cursor];
        for (int i = 0; i < nc; ++i)
          kernels::axpy(w * pvals[i], state.u, c[i]);
        kernels::mul2_add(w, state.u, state.u,
                          result.second_moment[obs_cursor]);
        if (!result.mean_v.empty())
          kernels::axpy(w, state.v, result.mean_v[obs_cursor]);
        ++obs_cursor;
      }
    };
    try {
      solve_deterministic(scheme, spec, xi, grid, tg, observer, opts);
    } catch (const BlowUpError& e) {
      throw BlowUpError("nipce_run: sample xi = " + std::to_string(xi) +
                            " failed: " + e.what(),
                        e.step(), e.time());
    }
    ++result.solver_runs;
  }
  return result;
}

} // namespace pcetd
