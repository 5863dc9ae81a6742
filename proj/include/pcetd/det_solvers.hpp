#pragma once

//==============================================================================
// Deterministic time integrators for a fixed parameter value: explicit Euler
// (finite differences), ETD-RDP in 1D and its integrating-factor splitting in
// 2D (rational approximation with two real poles, one shifted solve per
// pole), and the spectral fourth-order exponential Runge-Kutta scheme with
// contour-evaluated coefficients and dealiasing. The observer is invoked at
// every step, t_0 through t_M.
//==============================================================================

#include "pcetd/etd_coefficients.hpp"
#include "pcetd/grid.hpp"
#include "pcetd/models.hpp"
#include "pcetd/spectral.hpp"
#include "pcetd/time_grid.hpp"

#include <functional>

namespace pcetd {

enum class SchemeKind { ExplicitEuler, EtdRdp, Etdrk4 };

SchemeKind scheme_kind_from_string(const std::string& name);
const char* to_string(SchemeKind kind);

struct SolverOptions {
  int contour_points = 32;
  DealiasRule dealias = DealiasRule::TwoThirds;
  double blowup_threshold = 1e12;
};

using DetObserver =
    std::function<void(int step, double t, const FieldState& state)>;

FieldState ee_solve(const ModelSpec& spec, double xi, const PeriodicGrid& grid,
                    const TimeGrid& tg, const DetObserver& observer = {},
                    const SolverOptions& opts = {});

/// 1D grids only; the 2D variant is etdrdpif_solve_2d.
FieldState etdrdp_solve(const ModelSpec& spec, double xi,
                        const PeriodicGrid& grid, const TimeGrid& tg,
                        const DetObserver& observer = {},
                        const SolverOptions& opts = {});

FieldState etdrdpif_solve_2d(const ModelSpec& spec, double xi,
                             const PeriodicGrid& grid, const TimeGrid& tg,
                             const DetObserver& observer = {},
                             const SolverOptions& opts = {});

FieldState etdrk4_solve(const ModelSpec& spec, double xi,
                        const PeriodicGrid& grid, const TimeGrid& tg,
                        const DetObserver& observer = {},
                        const SolverOptions& opts = {});

/// Dispatch on (scheme, grid dim); EtdRdp on a 2D grid runs the
/// integrating-factor splitting.
FieldState solve_deterministic(SchemeKind scheme, const ModelSpec& spec,
                               double xi, const PeriodicGrid& grid,
                               const TimeGrid& tg,
                               const DetObserver& observer = {},
                               const SolverOptions& opts = {});

} // namespace pcetd
