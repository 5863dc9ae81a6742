#include "pcetd/analysis.hpp"

#include "pcetd/errors.hpp"
#include "pcetd/kernels.hpp"
#include "pcetd/legendre.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace pcetd {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// (e^{-alpha t} - e^{-beta t}) / ((beta-alpha) t), stable for small t via expm1.
double exp_difference_ratio(double alpha, double beta, double t) {
  return -std::exp(-alpha * t) * std::expm1(-(beta - alpha) * t) /
         ((beta - alpha) * t);
}
} // namespace

double exact_mean_linear(double x, double t, double a, double b, double D,
                         int dim, double y) {
  const double profile =
      dim == 1 ? std::cos(kPi * x) : std::cos(kPi * x) * std::cos(kPi * y);
  const double shift = dim == 1 ? D * kPi * kPi : 2.0 * D * kPi * kPi;
  if (t == 0.0) return profile;
  return profile * exp_difference_ratio(shift + a, shift + b, t);
}

double exact_variance_linear(double x, double t, double a, double b,
                             double D) {
  if (t == 0.0) return 0.0;
  const double c = std::cos(kPi * x);
  const double shift = D * kPi * kPi;
  const double second =
      c * c * exp_difference_ratio(2.0 * (shift + a), 2.0 * (shift + b), t);
  const double mean = exact_mean_linear(x, t, a, b, D);
  return second - mean * mean;
}

std::vector<double> exact_mean_linear_field(const PeriodicGrid& grid, double t,
                                            double a, double b, double D) {
  std::vector<double> f(grid.size());
  const auto& x = grid.nodes();
  if (grid.dim() == 1) {
    for (int i = 0; i < grid.p(); ++i)
      f[i] = exact_mean_linear(x[i], t, a, b, D);
  } else {
    // profile is separable; the exponential factor is common
    const double common = t == 0.0
                              ? 1.0
                              : exp_difference_ratio(2.0 * D * kPi * kPi + a,
                                                     2.0 * D * kPi * kPi + b, t);
    for (int iy = 0; iy < grid.p(); ++iy)
      for (int ix = 0; ix < grid.p(); ++ix)
        f[grid.index(ix, iy)] =
            common * std::cos(kPi * x[ix]) * std::cos(kPi * x[iy]);
  }
  return f;
}

std::vector<double> exact_variance_linear_field(const PeriodicGrid& grid,
                                                double t, double a, double b,
                                                double D) {
  if (grid.dim() != 1)
    throw InvalidArgument("exact_variance_linear_field: 1D only");
  std::vector<double> f(grid.size());
  for (int i = 0; i < grid.p(); ++i)
    f[i] = exact_variance_linear(grid.nodes()[i], t, a, b, D);
  return f;
}

std::optional<double> rel_l2_error(std::span<const double> approx,
                                   std::span<const double> reference) {
  if (approx.size() != reference.size())
    throw InvalidArgument("rel_l2_error: size mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    const double d = approx[i] - reference[i];
    num += d * d;
    den += reference[i] * reference[i];
  }
  if (den == 0.0) return std::nullopt;
  return std::sqrt(num / den); // the uniform weight h cancels
}

const char* to_string(StatKind stat) {
  return stat == StatKind::Mean ? "mean" : "variance";
}

// --- ReferenceSolution ---------------------------------------------------------

ReferenceSolution ReferenceSolution::exact_linear(const ModelSpec& spec,
                                                  const PeriodicGrid& grid) {
  if (spec.kind != ModelKind::Linear)
    throw InvalidArgument("exact_linear reference: linear model only");
  ReferenceSolution ref;
  ref.kind_ = Kind::ExactClosedForm;
  ref.spec_ = spec;
  ref.grid_ = grid;
  return ref;
}

ReferenceSolution ReferenceSolution::nipce_gq(const ModelSpec& spec,
                                              const PeriodicGrid& grid,
                                              double T, int m_ref, int q_ref,
                                              int projection_degree,
                                              const SolverOptions& opts) {
  ReferenceSolution ref;
  ref.kind_ = Kind::NipceGq;
  ref.spec_ = spec;
  ref.grid_ = grid;
  ref.T_ = T;
  ref.m_ref_ = m_ref;
  ref.q_ref_ = q_ref;
  ref.degree_ = projection_degree;

  const auto samples =
      make_samples(SamplerKind::GaussQuadrature, q_ref, spec.a, spec.b);
  const TimeGrid tg(T, m_ref);
  const int stride = grid.dim() == 1 ? 1 : 10;
  const auto proj = nipce_run(spec, SchemeKind::Etdrk4, samples,
                              projection_degree, grid, tg, stride, opts);
  ref.times_ = proj.times;
  ref.mean_.reserve(proj.times.size());
  ref.variance_.reserve(proj.times.size());
  for (std::size_t tI = 0; tI < proj.times.size(); ++tI) {
    ref.mean_.push_back(proj.mean(tI));
    ref.variance_.push_back(proj.variance(tI));
  }
  return ref;
}

std::optional<std::size_t> ReferenceSolution::lookup(double t) const {
  if (times_.empty()) return std::nullopt;
  const double tol = 1e-9 * std::max(1.0, T_);
  auto it = std::lower_bound(times_.begin(), times_.end(), t - tol);
  if (it == times_.end() || std::fabs(*it - t) > tol) return std::nullopt;
  return static_cast<std::size_t>(it - times_.begin());
}

std::optional<std::vector<double>> ReferenceSolution::mean_at(double t) const {
  if (kind_ == Kind::ExactClosedForm)
    return exact_mean_linear_field(grid_, t, spec_.a, spec_.b, spec_.D);
  const auto idx = lookup(t);
  if (!idx) return std::nullopt;
  return mean_[*idx];
}

std::optional<std::vector<double>>
ReferenceSolution::variance_at(double t) const {
  if (kind_ == Kind::ExactClosedForm) {
    if (grid_.dim() != 1) return std::nullopt;
    return exact_variance_linear_field(grid_, t, spec_.a, spec_.b, spec_.D);
  }
  const auto idx = lookup(t);
  if (!idx) return std::nullopt;
  return variance_[*idx];
}

std::map<std::string, std::string> ReferenceSolution::provenance() const {
  std::map<std::string, std::string> meta;
  if (kind_ == Kind::ExactClosedForm) {
    meta["reference"] = "exact-closed-form";
  } else {
    meta["reference"] = "nipce-gq";
    meta["reference_scheme"] = "etdrk4";
    meta["reference_M"] = std::to_string(m_ref_);
    meta["reference_q"] = std::to_string(q_ref_);
    meta["reference_degree"] = std::to_string(degree_);
  }
  return meta;
}

// --- experiment drivers ----------------------------------------------------------

namespace {

std::vector<double> ipce_mean(const PceState& s) {
  auto m = s.coeff_u(0);
  return {m.begin(), m.end()};
}

std::vector<double> ipce_variance(const PceState& s) {
  std::vector<double> var(s.n_points, 0.0);
  for (int i = 1; i < s.n_coeff; ++i)
    kernels::mul2_add(1.0, s.coeff_u(i), s.coeff_u(i), var);
  return var;
}

void append_point(ErrorSeries& series, double t,
                  const std::vector<double>& approx,
                  const std::optional<std::vector<double>>& ref) {
  if (!ref) return;
  const auto err = rel_l2_error(approx, *ref);
  if (!err) return; // missing data point, not zero
  series.times.push_back(t);
  series.errors.push_back(*err);
}

} // namespace

std::vector<ErrorSeries>
ipce_error_curves(const ModelSpec& spec, SchemeKind scheme,
                  const PeriodicGrid& grid, const TimeGrid& tg, StatKind stat,
                  const std::vector<int>& n_list, const ReferenceSolution& ref,
                  int obs_stride, const SolverOptions& opts) {
  std::vector<ErrorSeries> curves;
  for (int N : n_list) {
    ErrorSeries series;
    series.label = "N=" + std::to_string(N);
    series.meta = ref.provenance();
    series.meta["mode"] = "ipce";
    series.meta["model"] = to_string(spec.kind);
    series.meta["scheme"] = to_string(scheme);
    series.meta["stat"] = to_string(stat);
    series.meta["N"] = std::to_string(N);
    series.meta["M"] = std::to_string(tg.M);
    series.meta["p"] = std::to_string(grid.p());

    const PceCoupling coupling = make_coupling(spec, N);
    auto observer = [&](int step, double t, const PceState& s) {
      if (step % obs_stride != 0 && step != tg.M) return;
      if (stat == StatKind::Variance && step == 0) return;
      if (stat == StatKind::Mean)
        append_point(series, t, ipce_mean(s), ref.mean_at(t));
      else
        append_point(series, t, ipce_variance(s), ref.variance_at(t));
    };
    solve_ipce(scheme, spec, coupling, grid, tg, observer, opts);
    curves.push_back(std::move(series));
  }
  return curves;
}

std::vector<ErrorSeries>
nipce_error_curves(const ModelSpec& spec, SchemeKind scheme,
                   const PeriodicGrid& grid, const TimeGrid& tg, StatKind stat,
                   const std::vector<SamplerKind>& samplers, int q,
                   int projection_degree, std::uint64_t seed, int mc_repeats,
                   const ReferenceSolution& ref, int obs_stride,
                   const SolverOptions& opts) {
  std::vector<ErrorSeries> curves;
  for (SamplerKind kind : samplers) {
    ErrorSeries series;
    series.label = kind == SamplerKind::MonteCarlo ? "MC"
                   : kind == SamplerKind::GaussQuadrature ? "GQ"
                                                          : "QMC";
    series.meta = ref.provenance();
    series.meta["mode"] = "nipce";
    series.meta["model"] = to_string(spec.kind);
    series.meta["scheme"] = to_string(scheme);
    series.meta["stat"] = to_string(stat);
    series.meta["sampler"] = to_string(kind);
    series.meta["q"] = std::to_string(q);
    series.meta["Nprime"] = std::to_string(projection_degree);
    series.meta["M"] = std::to_string(tg.M);
    series.meta["p"] = std::to_string(grid.p());

    const int repeats = kind == SamplerKind::MonteCarlo ? mc_repeats : 1;
    std::vector<double> times;
    std::vector<double> acc;
    for (int rep = 0; rep < repeats; ++rep) {
      const auto samples =
          make_samples(kind, q, spec.a, spec.b, seed + static_cast<std::uint64_t>(rep));
      const auto proj = nipce_run(spec, scheme, samples, projection_degree,
                                  grid, tg, obs_stride, opts);
      ErrorSeries one;
      for (std::size_t tI = 0; tI < proj.times.size(); ++tI) {
        const double t = proj.times[tI];
        if (stat == StatKind::Variance && proj.steps[tI] == 0) continue;
        if (stat == StatKind::Mean)
          append_point(one, t, proj.mean(tI), ref.mean_at(t));
        else
          append_point(one, t, proj.variance(tI), ref.variance_at(t));
      }
      if (rep == 0) {
        times = one.times;
        acc.assign(one.errors.begin(), one.errors.end());
      } else {
        if (one.errors.size() != acc.size())
          throw NumericalFailure("nipce_error_curves: repeat size mismatch", 0);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += one.errors[i];
      }
    }
    for (double& e : acc) e /= repeats;
    series.times = std::move(times);
    series.errors = std::move(acc);
    if (kind == SamplerKind::MonteCarlo) {
      series.meta["seed"] = std::to_string(seed);
      series.meta["mc_repeats"] = std::to_string(mc_repeats);
    }
    curves.push_back(std::move(series));
  }
  return curves;
}

std::vector<ErrorSeries>
performance_sweep(const ModelSpec& spec, const std::vector<SchemeKind>& schemes,
                  const PeriodicGrid& grid, double T,
                  const std::vector<int>& m_list, int n_ipce, int q_nipce,
                  const ReferenceSolution& ref, const SolverOptions& opts) {
  std::vector<ErrorSeries> curves;
  const auto final_ref = ref.mean_at(T);
  if (!final_ref)
    throw InvalidArgument("performance_sweep: reference lacks the final time");

  auto make_series = [&](const std::string& label, const std::string& mode) {
    ErrorSeries s;
    s.label = label;
    s.meta = ref.provenance();
    s.meta["mode"] = mode;
    s.meta["model"] = to_string(spec.kind);
    s.meta["stat"] = "mean";
    s.meta["p"] = std::to_string(grid.p());
    s.meta["T"] = std::to_string(T);
    return s;
  };

  for (SchemeKind scheme : schemes) {
    const std::string tag = scheme == SchemeKind::ExplicitEuler ? "EE"
                            : scheme == SchemeKind::EtdRdp      ? "RDP"
                                                                : "RK4";
    ErrorSeries si = make_series(tag + "i", "ipce");
    si.meta["scheme"] = to_string(scheme);
    si.meta["N"] = std::to_string(n_ipce);
    const PceCoupling coupling = make_coupling(spec, n_ipce);
    for (int M : m_list) {
      const TimeGrid tg(T, M);
      const PceState s =
          solve_ipce(scheme, spec, coupling, grid, tg, {}, opts);
      const auto err = rel_l2_error(ipce_mean(s), *final_ref);
      si.times.push_back(M);
      si.errors.push_back(err.value_or(0.0));
    }
    curves.push_back(std::move(si));
  }
  for (SchemeKind scheme : schemes) {
    const std::string tag = scheme == SchemeKind::ExplicitEuler ? "EE"
                            : scheme == SchemeKind::EtdRdp      ? "RDP"
                                                                : "RK4";
    ErrorSeries sn = make_series(tag + "n", "nipce");
    sn.meta["scheme"] = to_string(scheme);
    sn.meta["q"] = std::to_string(q_nipce);
    const auto samples =
        make_samples(SamplerKind::GaussQuadrature, q_nipce, spec.a, spec.b);
    for (int M : m_list) {
      const TimeGrid tg(T, M);
      const auto proj = nipce_run(spec, scheme, samples, 0, grid, tg, tg.M, opts);
      const auto err = rel_l2_error(proj.mean(proj.times.size() - 1),
                                    *final_ref);
      sn.times.push_back(M);
      sn.errors.push_back(err.value_or(0.0));
    }
    curves.push_back(std::move(sn));
  }
  return curves;
}

// --- runtime ratios -----------------------------------------------------------------

std::int64_t contraction_op_count(ModelKind kind, int degree) {
  const std::int64_t n1 = degree + 1;
  switch (kind) {
  case ModelKind::Linear: return n1 * n1;
  case ModelKind::Quadratic: return n1 * n1 * n1;
  case ModelKind::Cubic: return linearization_table(degree).total_summands;
  case ModelKind::GrayScott:
    throw InvalidArgument("contraction_op_count: scalar models only");
  }
  throw InvalidArgument("contraction_op_count: unknown model");
}

RuntimeReport runtime_ratio(const ModelSpec& spec, SchemeKind scheme,
                            int n_max, const PeriodicGrid& grid, double T,
                            int M, int repeats, const SolverOptions& opts) {
  RuntimeReport report;
  const TimeGrid tg(T, M);
  double base = 0.0;
  for (int N = 0; N <= n_max; ++N) {
    const PceCoupling coupling = make_coupling(spec, N);
    const auto start = std::chrono::steady_clock::now();
    for (int rep = 0; rep < repeats; ++rep)
      solve_ipce(scheme, spec, coupling, grid, tg, {}, opts);
    const auto stop = std::chrono::steady_clock::now();
    const double secs =
        std::chrono::duration<double>(stop - start).count() / repeats;
    if (N == 0) base = secs;
    report.n_values.push_back(N);
    report.ratios.push_back(N == 0 ? 1.0 : secs / base);
    report.op_counts.push_back(contraction_op_count(spec.kind, N));
  }
  return report;
}

} // namespace pcetd
