#include "pcetd/det_solvers.hpp"

#include "pcetd/errors.hpp"
#include "pcetd/kernels.hpp"
#include "pcetd/laplacian.hpp"

#include "solver_core.hpp"

#include <memory>

namespace pcetd {

SchemeKind scheme_kind_from_string(const std::string& name) {
  if (name == "ee") return SchemeKind::ExplicitEuler;
  if (name == "etdrdp") return SchemeKind::EtdRdp;
  if (name == "etdrk4") return SchemeKind::Etdrk4;
  throw InvalidArgument("unknown scheme: " + name);
}

const char* to_string(SchemeKind kind) {
  switch (kind) {
  case SchemeKind::ExplicitEuler: return "ee";
  case SchemeKind::EtdRdp: return "etdrdp";
  case SchemeKind::Etdrk4: return "etdrk4";
  }
  return "?";
}

namespace {

void notify(const DetObserver& obs, int step, double t,
            const FieldState& state) {
  if (obs) obs(step, t, state);
}

void check_state(const FieldState& s, double threshold, int step, double t,
                 const char* scheme) {
  detail::check_finite(s.u, threshold, step, t, scheme);
  if (!s.v.empty()) detail::check_finite(s.v, threshold, step, t, scheme);
}

} // namespace

FieldState ee_solve(const ModelSpec& spec, double xi, const PeriodicGrid& grid,
                    const TimeGrid& tg, const DetObserver& observer,
                    const SolverOptions& opts) {
  FieldState s = initial_condition(spec, grid);
  const FdLaplacian lap(grid);
  const double k = tg.k();
  const std::size_t n = grid.size();
  std::vector<double> lap_u(n), f_u(n), lap_v, f_v;
  const bool gs = is_gray_scott(spec.kind);
  if (gs) {
    lap_v.resize(n);
    f_v.resize(n);
  }
  notify(observer, 0, 0.0, s);
  for (int step = 0; step < tg.M; ++step) {
    if (gs) {
      lap.apply(s.u, lap_u);
      lap.apply(s.v, lap_v);
      rhs_det_gs(spec, xi, s.u, s.v, f_u, f_v);
      kernels::axpy(k * spec.Du, lap_u, s.u);
      kernels::axpy(k, f_u, s.u);
      kernels::axpy(k * spec.Dv, lap_v, s.v);
      kernels::axpy(k, f_v, s.v);
    } else {
      lap.apply(s.u, lap_u);
      rhs_det(spec, xi, s.u, f_u);
      kernels::axpy(k * spec.D, lap_u, s.u);
      kernels::axpy(k, f_u, s.u);
    }
    s.t = tg.t(step + 1);
    check_state(s, opts.blowup_threshold, step + 1, s.t, "explicit euler");
    notify(observer, step + 1, s.t, s);
  }
  return s;
}

FieldState etdrdp_solve(const ModelSpec& spec, double xi,
                        const PeriodicGrid& grid, const TimeGrid& tg,
                        const DetObserver& observer,
                        const SolverOptions& opts) {
  if (grid.dim() != 1)
    throw InvalidArgument("etdrdp_solve: 1D grids only; use etdrdpif_solve_2d");
  FieldState s = initial_condition(spec, grid);
  const double k = tg.k();
  const bool gs = is_gray_scott(spec.kind);
  const double Du = spec.diffusion_u();

  // One factorization per pole, reused for every step (and species).
  const ShiftedSolver s3u(grid, k * Du / 3.0), s4u(grid, k * Du / 4.0),
      s1u(grid, k * Du);
  std::unique_ptr<ShiftedSolver> s3v, s4v, s1v;
  if (gs) {
    s3v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv / 3.0);
    s4v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv / 4.0);
    s1v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv);
  }

  const std::size_t n = grid.size();
  std::vector<double> fu(n), fs(n), pred(n), b1(n), b2(n), x1(n), x2(n);
  std::vector<double> fv, fsv, predv, b1v, b2v;
  if (gs) {
    fv.resize(n);
    fsv.resize(n);
    predv.resize(n);
    b1v.resize(n);
    b2v.resize(n);
  }

  notify(observer, 0, 0.0, s);
  for (int step = 0; step < tg.M; ++step) {
    if (gs) {
      rhs_det_gs(spec, xi, s.u, s.v, fu, fv);
      for (std::size_t i = 0; i < n; ++i) b1[i] = s.u[i] + k * fu[i];
      s1u.solve(b1, pred);
      for (std::size_t i = 0; i < n; ++i) b1v[i] = s.v[i] + k * fv[i];
      s1v->solve(b1v, predv);
      rhs_det_gs(spec, xi, pred, predv, fs, fsv);

      detail::rdp_brackets(s.u, fu, fs, k, b1, b2);
      s3u.solve(b1, x1);
      s4u.solve(b2, x2);
      detail::sub_into(x1, x2, s.u);

      detail::rdp_brackets(s.v, fv, fsv, k, b1v, b2v);
      s3v->solve(b1v, x1);
      s4v->solve(b2v, x2);
      detail::sub_into(x1, x2, s.v);
    } else {
      rhs_det(spec, xi, s.u, fu);
      for (std::size_t i = 0; i < n; ++i) b1[i] = s.u[i] + k * fu[i];
      s1u.solve(b1, pred);
      rhs_det(spec, xi, pred, fs);
      detail::rdp_brackets(s.u, fu, fs, k, b1, b2);
      s3u.solve(b1, x1);
      s4u.solve(b2, x2);
      detail::sub_into(x1, x2, s.u);
    }
    s.t = tg.t(step + 1);
    check_state(s, opts.blowup_threshold, step + 1, s.t, "etd-rdp");
    notify(observer, step + 1, s.t, s);
  }
  return s;
}

namespace {

// {9 (I + (k/3) D A_1)^{-1} - 8 (I + (k/4) D A_1)^{-1}} g, lines along x.
void rdp_if_inner(const ShiftedSolver& s3, const ShiftedSolver& s4,
                  std::span<const double> g, std::span<double> out,
                  std::vector<double>& w1, std::vector<double>& w2) {
  s3.solve_along_x(g, w1);
  s4.solve_along_x(g, w2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = 9.0 * w1[i] - 8.0 * w2[i];
}

struct RdpIfSpecies {
  const ShiftedSolver *s3, *s4, *s1;
};

// One ETD-RDP-IF update of a single species field.
void rdp_if_step(const RdpIfSpecies& sv, double k, std::span<double> u,
                 std::span<const double> fu, std::span<const double> fs,
                 std::vector<double>& g, std::vector<double>& inner,
                 std::vector<double>& t1, std::vector<double>& t2,
                 std::vector<double>& w1, std::vector<double>& w2) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) g[i] = 9.0 * u[i] + 2.0 * k * fu[i];
  rdp_if_inner(*sv.s3, *sv.s4, g, inner, w1, w2);
  for (std::size_t i = 0; i < n; ++i) inner[i] += k * fs[i];
  sv.s3->solve_along_y(inner, t1);

  for (std::size_t i = 0; i < n; ++i) g[i] = 8.0 * u[i] + 1.5 * k * fu[i];
  rdp_if_inner(*sv.s3, *sv.s4, g, inner, w1, w2);
  for (std::size_t i = 0; i < n; ++i) inner[i] += 0.5 * k * fs[i];
  sv.s4->solve_along_y(inner, t2);

  detail::sub_into(t1, t2, u);
}

} // namespace

FieldState etdrdpif_solve_2d(const ModelSpec& spec, double xi,
                             const PeriodicGrid& grid, const TimeGrid& tg,
                             const DetObserver& observer,
                             const SolverOptions& opts) {
  if (grid.dim() != 2)
    throw InvalidArgument("etdrdpif_solve_2d: 2D grids only");
  FieldState s = initial_condition(spec, grid);
  const double k = tg.k();
  const bool gs = is_gray_scott(spec.kind);
  const double Du = spec.diffusion_u();

  const ShiftedSolver s3u(grid, k * Du / 3.0), s4u(grid, k * Du / 4.0),
      s1u(grid, k * Du);
  std::unique_ptr<ShiftedSolver> s3v, s4v, s1v;
  if (gs) {
    s3v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv / 3.0);
    s4v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv / 4.0);
    s1v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv);
  }
  const RdpIfSpecies su{&s3u, &s4u, &s1u};
  const RdpIfSpecies svs{s3v.get(), s4v.get(), s1v.get()};

  const std::size_t n = grid.size();
  std::vector<double> fu(n), fs(n), pred(n), g(n), inner(n), t1(n), t2(n),
      w1(n), w2(n);
  std::vector<double> fv, fsv, predv;
  if (gs) {
    fv.resize(n);
    fsv.resize(n);
    predv.resize(n);
  }

  auto predictor = [&](const RdpIfSpecies& sp, std::span<const double> u,
                       std::span<const double> f, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) g[i] = u[i] + k * f[i];
    sp.s1->solve_along_x(g, w1);
    sp.s1->solve_along_y(w1, out);
  };

  notify(observer, 0, 0.0, s);
  for (int step = 0; step < tg.M; ++step) {
    if (gs) {
      rhs_det_gs(spec, xi, s.u, s.v, fu, fv);
      predictor(su, s.u, fu, pred);
      predictor(svs, s.v, fv, predv);
      rhs_det_gs(spec, xi, pred, predv, fs, fsv);
      rdp_if_step(su, k, s.u, fu, fs, g, inner, t1, t2, w1, w2);
      rdp_if_step(svs, k, s.v, fv, fsv, g, inner, t1, t2, w1, w2);
    } else {
      rhs_det(spec, xi, s.u, fu);
      predictor(su, s.u, fu, pred);
      rhs_det(spec, xi, pred, fs);
      rdp_if_step(su, k, s.u, fu, fs, g, inner, t1, t2, w1, w2);
    }
    s.t = tg.t(step + 1);
    check_state(s, opts.blowup_threshold, step + 1, s.t, "etd-rdp-if");
    notify(observer, step + 1, s.t, s);
  }
  return s;
}

FieldState etdrk4_solve(const ModelSpec& spec, double xi,
                        const PeriodicGrid& grid, const TimeGrid& tg,
                        const DetObserver& observer,
                        const SolverOptions& opts) {
  const bool gs = is_gray_scott(spec.kind);
  const SpectralTransform tr(grid);
  const SpectralSymbol sym(grid);
  const auto mask = dealias_mask(grid, opts.dealias);
  const double k = tg.k();
  const std::size_t n = grid.size();

  std::vector<double> lam_u(n), lam_v;
  kernels::scale_into(spec.diffusion_u(), sym.diag(), lam_u);
  const EtdCoefficients cu =
      build_etd_coefficients(lam_u, k, opts.contour_points);
  EtdCoefficients cv;
  if (gs) {
    lam_v.resize(n);
    kernels::scale_into(spec.Dv, sym.diag(), lam_v);
    cv = build_etd_coefficients(lam_v, k, opts.contour_points);
  }

  detail::Etdrk4Core core;
  core.transform = &tr;
  core.mask = &mask;
  core.coeffs = gs ? std::vector<const EtdCoefficients*>{&cu, &cv}
                   : std::vector<const EtdCoefficients*>{&cu};
  core.rhs_phys = [&](const detail::RealFields& phys, detail::RealFields& rhs) {
    if (gs)
      rhs_det_gs(spec, xi, phys[0], phys[1], rhs[0], rhs[1]);
    else
      rhs_det(spec, xi, phys[0], rhs[0]);
  };
  core.init_workspace();

  FieldState s = initial_condition(spec, grid);
  std::vector<detail::CplxField> U;
  U.push_back(tr.forward(s.u));
  if (gs) U.push_back(tr.forward(s.v));

  notify(observer, 0, 0.0, s);
  for (int step = 0; step < tg.M; ++step) {
    core.step(U);
    s.t = tg.t(step + 1);
    s.u = tr.inverse(U[0]);
    if (gs) s.v = tr.inverse(U[1]);
    check_state(s, opts.blowup_threshold, step + 1, s.t, "etdrk4");
    notify(observer, step + 1, s.t, s);
  }
  return s;
}

FieldState solve_deterministic(SchemeKind scheme, const ModelSpec& spec,
                               double xi, const PeriodicGrid& grid,
                               const TimeGrid& tg, const DetObserver& observer,
                               const SolverOptions& opts) {
  switch (scheme) {
  case SchemeKind::ExplicitEuler:
    return ee_solve(spec, xi, grid, tg, observer, opts);
  case SchemeKind::EtdRdp:
    return grid.dim() == 1 ? etdrdp_solve(spec, xi, grid, tg, observer, opts)
                           : etdrdpif_solve_2d(spec, xi, grid, tg, observer,
                                               opts);
  case SchemeKind::Etdrk4:
    return etdrk4_solve(spec, xi, grid, tg, observer, opts);
  }
  throw InvalidArgument("solve_deterministic: unknown scheme");
}

} // namespace pcetd
