#pragma once

//==============================================================================
// Intrusive PCE time integrators on the stacked coefficient system. The
// linear part is block-diagonal (the same spatial operator acts on every
// coefficient field), so one cached factorization / coefficient table per
// pole or mode serves all N+1 blocks; the coupling enters only through the
// Galerkin-projected reaction term.
//==============================================================================

#include "pcetd/det_solvers.hpp"
#include "pcetd/models.hpp"
#include "pcetd/pce_state.hpp"

#include <functional>

namespace pcetd {

using IpceObserver =
    std::function<void(int step, double t, const PceState& state)>;

PceState ipce_ee_solve(const ModelSpec& spec, const PceCoupling& coupling,
                       const PeriodicGrid& grid, const TimeGrid& tg,
                       const IpceObserver& observer = {},
                       const SolverOptions& opts = {});

PceState ipce_etdrdp_solve(const ModelSpec& spec, const PceCoupling& coupling,
                           const PeriodicGrid& grid, const TimeGrid& tg,
                           const IpceObserver& observer = {},
                           const SolverOptions& opts = {});

PceState ipce_etdrdpif_solve_2d(const ModelSpec& spec,
                                const PceCoupling& coupling,
                                const PeriodicGrid& grid, const TimeGrid& tg,
                                const IpceObserver& observer = {},
                                const SolverOptions& opts = {});

PceState ipce_etdrk4_solve(const ModelSpec& spec, const PceCoupling& coupling,
                           const PeriodicGrid& grid, const TimeGrid& tg,
                           const IpceObserver& observer = {},
                           const SolverOptions& opts = {});

PceState solve_ipce(SchemeKind scheme, const ModelSpec& spec,
                    const PceCoupling& coupling, const PeriodicGrid& grid,
                    const TimeGrid& tg, const IpceObserver& observer = {},
                    const SolverOptions& opts = {});

} // namespace pcetd
