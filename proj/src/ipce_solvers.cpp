#include "pcetd/ipce_solvers.hpp"

#include "pcetd/errors.hpp"
#include "pcetd/kernels.hpp"
#include "pcetd/laplacian.hpp"

#include "solver_core.hpp"

#include <memory>

namespace pcetd {

namespace {

void notify(const IpceObserver& obs, int step, double t, const PceState& s) {
  if (obs) obs(step, t, s);
}

void check_state(const PceState& s, double threshold, int step, double t,
                 const char* scheme) {
  detail::check_finite(s.u, threshold, step, t, scheme);
  if (s.has_v) detail::check_finite(s.v, threshold, step, t, scheme);
}

void zero(PceState& s) {
  std::fill(s.u.begin(), s.u.end(), 0.0);
  if (s.has_v) std::fill(s.v.begin(), s.v.end(), 0.0);
}

} // namespace

PceState ipce_ee_solve(const ModelSpec& spec, const PceCoupling& coupling,
                       const PeriodicGrid& grid, const TimeGrid& tg,
                       const IpceObserver& observer,
                       const SolverOptions& opts) {
  const int degree = coupling.weighted.degree();
  PceState s = ipce_initial_condition(spec, grid, degree);
  PceState f(s.n_coeff, s.n_points, s.has_v);
  const FdLaplacian lap(grid);
  const double k = tg.k();
  std::vector<double> lap_buf(s.n_points);

  notify(observer, 0, 0.0, s);
  for (int step = 0; step < tg.M; ++step) {
    zero(f);
    rhs_ipce(spec, coupling, s, f);
    for (int i = 0; i < s.n_coeff; ++i) {
      lap.apply(s.coeff_u(i), lap_buf);
      kernels::axpy(k * spec.diffusion_u(), lap_buf, s.coeff_u(i));
      kernels::axpy(k, f.coeff_u(i), s.coeff_u(i));
      if (s.has_v) {
        lap.apply(s.coeff_v(i), lap_buf);
        kernels::axpy(k * spec.Dv, lap_buf, s.coeff_v(i));
        kernels::axpy(k, f.coeff_v(i), s.coeff_v(i));
      }
    }
    s.t = tg.t(step + 1);
    check_state(s, opts.blowup_threshold, step + 1, s.t, "ipce explicit euler");
    notify(observer, step + 1, s.t, s);
  }
  return s;
}

PceState ipce_etdrdp_solve(const ModelSpec& spec, const PceCoupling& coupling,
                           const PeriodicGrid& grid, const TimeGrid& tg,
                           const IpceObserver& observer,
                           const SolverOptions& opts) {
  if (grid.dim() != 1)
    throw InvalidArgument("ipce_etdrdp_solve: 1D grids only");
  const int degree = coupling.weighted.degree();
  PceState s = ipce_initial_condition(spec, grid, degree);
  PceState f(s.n_coeff, s.n_points, s.has_v);
  PceState pred(s.n_coeff, s.n_points, s.has_v);
  PceState fs(s.n_coeff, s.n_points, s.has_v);
  const double k = tg.k();
  const bool gs = s.has_v;

  const ShiftedSolver s3u(grid, k * spec.diffusion_u() / 3.0),
      s4u(grid, k * spec.diffusion_u() / 4.0), s1u(grid, k * spec.diffusion_u());
  std::unique_ptr<ShiftedSolver> s3v, s4v, s1v;
  if (gs) {
    s3v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv / 3.0);
    s4v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv / 4.0);
    s1v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv);
  }

  const std::size_t n = s.n_points;
  std::vector<double> b1(n), b2(n), x1(n), x2(n);

  notify(observer, 0, 0.0, s);
  for (int step = 0; step < tg.M; ++step) {
    zero(f);
    rhs_ipce(spec, coupling, s, f);
    for (int i = 0; i < s.n_coeff; ++i) {
      auto u = s.coeff_u(i);
      auto fu = f.coeff_u(i);
      for (std::size_t m = 0; m < n; ++m) b1[m] = u[m] + k * fu[m];
      s1u.solve(b1, pred.coeff_u(i));
      if (gs) {
        auto v = s.coeff_v(i);
        auto fv = f.coeff_v(i);
        for (std::size_t m = 0; m < n; ++m) b1[m] = v[m] + k * fv[m];
        s1v->solve(b1, pred.coeff_v(i));
      }
    }
    zero(fs);
    rhs_ipce(spec, coupling, pred, fs);
    for (int i = 0; i < s.n_coeff; ++i) {
      detail::rdp_brackets(s.coeff_u(i), f.coeff_u(i), fs.coeff_u(i), k, b1,
                           b2);
      s3u.solve(b1, x1);
      s4u.solve(b2, x2);
      detail::sub_into(x1, x2, s.coeff_u(i));
      if (gs) {
        detail::rdp_brackets(s.coeff_v(i), f.coeff_v(i), fs.coeff_v(i), k, b1,
                             b2);
        s3v->solve(b1, x1);
        s4v->solve(b2, x2);
        detail::sub_into(x1, x2, s.coeff_v(i));
      }
    }
    s.t = tg.t(step + 1);
    check_state(s, opts.blowup_threshold, step + 1, s.t, "ipce etd-rdp");
    notify(observer, step + 1, s.t, s);
  }
  return s;
}

namespace {

void ipce_rdp_if_species(const ShiftedSolver& s3, const ShiftedSolver& s4,
                         double k, std::span<double> u,
                         std::span<const double> fu,
                         std::span<const double> fsv, std::vector<double>& g,
                         std::vector<double>& inner, std::vector<double>& t1,
                         std::vector<double>& t2, std::vector<double>& w1,
                         std::vector<double>& w2) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) g[i] = 9.0 * u[i] + 2.0 * k * fu[i];
  s3.solve_along_x(g, w1);
  s4.solve_along_x(g, w2);
  for (std::size_t i = 0; i < n; ++i) inner[i] = 9.0 * w1[i] - 8.0 * w2[i];
  for (std::size_t i = 0; i < n; ++i) inner[i] += k * fsv[i];
  s3.solve_along_y(inner, t1);

  for (std::size_t i = 0; i < n; ++i) g[i] = 8.0 * u[i] + 1.5 * k * fu[i];
  s3.solve_along_x(g, w1);
  s4.solve_along_x(g, w2);
  for (std::size_t i = 0; i < n; ++i) inner[i] = 9.0 * w1[i] - 8.0 * w2[i];
  for (std::size_t i = 0; i < n; ++i) inner[i] += 0.5 * k * fsv[i];
  s4.solve_along_y(inner, t2);

  detail::sub_into(t1, t2, u);
}

} // namespace

PceState ipce_etdrdpif_solve_2d(const ModelSpec& spec,
                                const PceCoupling& coupling,
                                const PeriodicGrid& grid, const TimeGrid& tg,
                                const IpceObserver& observer,
                                const SolverOptions& opts) {
  if (grid.dim() != 2)
    throw InvalidArgument("ipce_etdrdpif_solve_2d: 2D grids only");
  const int degree = coupling.weighted.degree();
  PceState s = ipce_initial_condition(spec, grid, degree);
  PceState f(s.n_coeff, s.n_points, s.has_v);
  PceState pred(s.n_coeff, s.n_points, s.has_v);
  PceState fs(s.n_coeff, s.n_points, s.has_v);
  const double k = tg.k();
  const bool gs = s.has_v;

  const ShiftedSolver s3u(grid, k * spec.diffusion_u() / 3.0),
      s4u(grid, k * spec.diffusion_u() / 4.0), s1u(grid, k * spec.diffusion_u());
  std::unique_ptr<ShiftedSolver> s3v, s4v, s1v;
  if (gs) {
    s3v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv / 3.0);
    s4v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv / 4.0);
    s1v = std::make_unique<ShiftedSolver>(grid, k * spec.Dv);
  }

  const std::size_t n = s.n_points;
  std::vector<double> g(n), inner(n), t1(n), t2(n), w1(n), w2(n);

  auto predictor = [&](const ShiftedSolver& s1, std::span<const double> u,
                       std::span<const double> fu, std::span<double> out) {
    for (std::size_t i = 0; i < n; ++i) g[i] = u[i] + k * fu[i];
    s1.solve_along_x(g, w1);
    s1.solve_along_y(w1, out);
  };

  notify(observer, 0, 0.0, s);
  for (int step = 0; step < tg.M; ++step) {
    zero(f);
    rhs_ipce(spec, coupling, s, f);
    for (int i = 0; i < s.n_coeff; ++i) {
      predictor(s1u, s.coeff_u(i), f.coeff_u(i), pred.coeff_u(i));
      if (gs) predictor(*s1v, s.coeff_v(i), f.coeff_v(i), pred.coeff_v(i));
    }
    zero(fs);
    rhs_ipce(spec, coupling, pred, fs);
    for (int i = 0; i < s.n_coeff; ++i) {
      ipce_rdp_if_species(s3u, s4u, k, s.coeff_u(i), f.coeff_u(i),
                          fs.coeff_u(i), g, inner, t1, t2, w1, w2);
      if (gs)
        ipce_rdp_if_species(*s3v, *s4v, k, s.coeff_v(i), f.coeff_v(i),
                            fs.coeff_v(i), g, inner, t1, t2, w1, w2);
    }
    s.t = tg.t(step + 1);
    check_state(s, opts.blowup_threshold, step + 1, s.t, "ipce etd-rdp-if");
    notify(observer, step + 1, s.t, s);
  }
  return s;
}

PceState ipce_etdrk4_solve(const ModelSpec& spec, const PceCoupling& coupling,
                           const PeriodicGrid& grid, const TimeGrid& tg,
                           const IpceObserver& observer,
                           const SolverOptions& opts) {
  const int degree = coupling.weighted.degree();
  const int nc = degree + 1;
  const bool gs = is_gray_scott(spec.kind);
  const SpectralTransform tr(grid);
  const SpectralSymbol sym(grid);
  const auto mask = dealias_mask(grid, opts.dealias);
  const double k = tg.k();
  const std::size_t n = grid.size();

  std::vector<double> lam(n);
  kernels::scale_into(spec.diffusion_u(), sym.diag(), lam);
  const EtdCoefficients cu = build_etd_coefficients(lam, k, opts.contour_points);
  EtdCoefficients cv;
  if (gs) {
    kernels::scale_into(spec.Dv, sym.diag(), lam);
    cv = build_etd_coefficients(lam, k, opts.contour_points);
  }

  // channels: u_0..u_N, then (Gray-Scott) v_0..v_N
  detail::Etdrk4Core core;
  core.transform = &tr;
  core.mask = &mask;
  core.coeffs.assign(nc, &cu);
  if (gs) core.coeffs.insert(core.coeffs.end(), nc, &cv);

  PceState work(nc, n, gs), work_rhs(nc, n, gs);
  core.rhs_phys = [&](const detail::RealFields& phys,
                      detail::RealFields& rhs) {
    for (int i = 0; i < nc; ++i) {
      std::copy(phys[i].begin(), phys[i].end(), work.coeff_u(i).begin());
      if (gs)
        std::copy(phys[nc + i].begin(), phys[nc + i].end(),
                  work.coeff_v(i).begin());
    }
    zero(work_rhs);
    rhs_ipce(spec, coupling, work, work_rhs);
    for (int i = 0; i < nc; ++i) {
      std::copy(work_rhs.coeff_u(i).begin(), work_rhs.coeff_u(i).end(),
                rhs[i].begin());
      if (gs)
        std::copy(work_rhs.coeff_v(i).begin(), work_rhs.coeff_v(i).end(),
                  rhs[nc + i].begin());
    }
  };
  core.init_workspace();

  PceState s = ipce_initial_condition(spec, grid, degree);
  std::vector<detail::CplxField> U;
  for (int i = 0; i < nc; ++i) U.push_back(tr.forward(s.coeff_u(i)));
  if (gs)
    for (int i = 0; i < nc; ++i) U.push_back(tr.forward(s.coeff_v(i)));

  notify(observer, 0, 0.0, s);
  for (int step = 0; step < tg.M; ++step) {
    core.step(U);
    s.t = tg.t(step + 1);
    for (int i = 0; i < nc; ++i) {
      const auto ui = tr.inverse(U[i]);
      std::copy(ui.begin(), ui.end(), s.coeff_u(i).begin());
      if (gs) {
        const auto vi = tr.inverse(U[nc + i]);
        std::copy(vi.begin(), vi.end(), s.coeff_v(i).begin());
      }
    }
    check_state(s, opts.blowup_threshold, step + 1, s.t, "ipce etdrk4");
    notify(observer, step + 1, s.t, s);
  }
  return s;
}

PceState solve_ipce(SchemeKind scheme, const ModelSpec& spec,
                    const PceCoupling& coupling, const PeriodicGrid& grid,
                    const TimeGrid& tg, const IpceObserver& observer,
                    const SolverOptions& opts) {
  switch (scheme) {
  case SchemeKind::ExplicitEuler:
    return ipce_ee_solve(spec, coupling, grid, tg, observer, opts);
  case SchemeKind::EtdRdp:
    return grid.dim() == 1
               ? ipce_etdrdp_solve(spec, coupling, grid, tg, observer, opts)
               : ipce_etdrdpif_solve_2d(spec, coupling, grid, tg, observer,
                                        opts);
  case SchemeKind::Etdrk4:
    return ipce_etdrk4_solve(spec, coupling, grid, tg, observer, opts);
  }
  throw InvalidArgument("solve_ipce: unknown scheme");
}

} // namespace pcetd
