#pragma once

//==============================================================================
// Model definitions: the scalar reaction family u_t = D*Lap(u) - K(w) u^m for
// m = 1,2,3 with K ~ U[a,b], and the two-species Gray-Scott system
//   u_t = Du*Lap(u) - u v^2 + F(1-u)
//   v_t = Dv*Lap(v) + u v^2 - (F + k(w)) v
// with k ~ U[a,b]. Pointwise reaction terms only; diffusion belongs to the
// time integrators. Includes the Galerkin-projected right-hand sides for the
// intrusive PCE system.
//==============================================================================

#include "pcetd/grid.hpp"
#include "pcetd/legendre.hpp"
#include "pcetd/pce_state.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcetd {

enum class ModelKind { Linear, Quadratic, Cubic, GrayScott };

ModelKind model_kind_from_string(const std::string& name);
const char* to_string(ModelKind kind);
bool is_gray_scott(ModelKind kind);

struct ModelSpec {
  ModelKind kind = ModelKind::Linear;
  double D = 0.0;        // scalar-model diffusion
  double a = 1.0;        // random-parameter interval
  double b = 2.0;
  // Gray-Scott parameters
  double Du = 2e-5;
  double Dv = 1e-5;
  double F = 0.04;
  // Evaluate the 1D Gray-Scott v_init with a squared exponent instead of the
  // printed cubic one (experimentation knob; default is the printed formula).
  bool gs_vinit_squared = false;

  static ModelSpec linear(double D);
  static ModelSpec quadratic(double D);
  static ModelSpec cubic(double D);
  static ModelSpec gray_scott();

  /// Diffusion constant of the u species (D for scalar models, Du for GS).
  double diffusion_u() const { return is_gray_scott(kind) ? Du : D; }
  double diffusion_v() const { return Dv; }
};

struct FieldState {
  double t = 0.0;
  std::vector<double> u;
  std::vector<double> v; // Gray-Scott only
};

/// Closed-form initial-condition profiles (exposed for direct evaluation).
double gs_u_init_1d(double x);
double gs_v_init_1d(double x, bool squared_exponent);
double gs_v_init_2d(double x, double y);

FieldState initial_condition(const ModelSpec& spec, const PeriodicGrid& grid);
PceState ipce_initial_condition(const ModelSpec& spec, const PeriodicGrid& grid,
                                int degree);

/// Pointwise reaction term at parameter value xi (in [a,b]).
void rhs_det(const ModelSpec& spec, double xi, std::span<const double> u,
             std::span<double> fu);
void rhs_det_gs(const ModelSpec& spec, double xi, std::span<const double> u,
                std::span<const double> v, std::span<double> fu,
                std::span<double> fv);

/// Tensors required by the Galerkin-projected reaction term. Scalar models
/// need the parameter-weighted family only; Gray-Scott also needs the
/// unweighted one.
struct PceCoupling {
  LegendreBasis basis;
  GalerkinTensors weighted;              // E[xi P...]
  std::optional<GalerkinTensors> unit;   // E[P...] (Gray-Scott)
};

PceCoupling make_coupling(const ModelSpec& spec, int degree);

/// Galerkin-projected reaction term; out states must be zero-initialized
/// spans of the same shape as the inputs.
void rhs_ipce(const ModelSpec& spec, const PceCoupling& coupling,
              const PceState& state, PceState& out);

/// Gray-Scott homogeneous steady states. v_red = 0 always exists; the
/// non-trivial pair exists when d = 1 - 4(F+k)^2/F > 0. The scale alpha of
/// the non-trivial pair follows the cited source's convention and is
/// caller-supplied.
struct SteadyStates {
  double d = 0.0;
  double v_red = 0.0;
  std::optional<double> v_blue;
  std::optional<double> v_1;
};

SteadyStates steady_states(double F, double k, double alpha = 1.0);

/// Necessary Turing-pattern condition about the homogeneous state v0:
/// [2(F+k) - (v0^2+F)]^2 > 8(F+k)(v0^2-F).
bool turing_condition(double F, double k, double v0);

} // namespace pcetd
