#include "pcetd/models.hpp"

#include "pcetd/errors.hpp"
#include "pcetd/kernels.hpp"

#include <cmath>

namespace pcetd {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "linear") return ModelKind::Linear;
  if (name == "quadratic") return ModelKind::Quadratic;
  if (name == "cubic") return ModelKind::Cubic;
  if (name == "grayscott") return ModelKind::GrayScott;
  throw InvalidArgument("unknown model: " + name);
}

const char* to_string(ModelKind kind) {
  switch (kind) {
  case ModelKind::Linear: return "linear";
  case ModelKind::Quadratic: return "quadratic";
  case ModelKind::Cubic: return "cubic";
  case ModelKind::GrayScott: return "grayscott";
  }
  return "?";
}

bool is_gray_scott(ModelKind kind) { return kind == ModelKind::GrayScott; }

ModelSpec ModelSpec::linear(double D) {
  ModelSpec s;
  s.kind = ModelKind::Linear;
  s.D = D;
  return s;
}
ModelSpec ModelSpec::quadratic(double D) {
  ModelSpec s;
  s.kind = ModelKind::Quadratic;
  s.D = D;
  return s;
}
ModelSpec ModelSpec::cubic(double D) {
  ModelSpec s;
  s.kind = ModelKind::Cubic;
  s.D = D;
  return s;
}
ModelSpec ModelSpec::gray_scott() {
  ModelSpec s;
  s.kind = ModelKind::GrayScott;
  s.a = 0.058;
  s.b = 0.062;
  return s;
}

double gs_u_init_1d(double x) {
  return 1.0 - 5.0 / (3.0 * std::sqrt(2.0 * kPi)) * std::exp(-6.0 * x * x);
}

double gs_v_init_1d(double x, bool squared_exponent) {
  const double pref = 0.37 * 7.5 / (2.0 * std::sqrt(2.0) * std::tgamma(1.0 / 3.0));
  const double e = squared_exponent ? x * x : x * x * x;
  return pref * std::exp(-7.0 * e / std::sqrt(2.0));
}

double gs_v_init_2d(double x, double y) {
  static const double cx[4] = {2.0 / 7.0, -2.0 / 7.0, 2.0 / 7.0, -2.0 / 7.0};
  static const double cy[4] = {2.0 / 7.0, 2.0 / 7.0, -2.0 / 7.0, -2.0 / 7.0};
  double v = 0.0;
  for (int c = 0; c < 4; ++c) {
    const double dx = x - cx[c], dy = y - cy[c];
    v += std::exp(-150.0 * (dx * dx + dy * dy));
  }
  return 0.25 * v;
}

FieldState initial_condition(const ModelSpec& spec, const PeriodicGrid& grid) {
  FieldState state;
  state.t = 0.0;
  state.u.resize(grid.size());
  const auto& x = grid.nodes();
  const int p = grid.p();
  if (!is_gray_scott(spec.kind)) {
    if (grid.dim() == 1) {
      for (int i = 0; i < p; ++i) state.u[i] = std::cos(kPi * x[i]);
    } else {
      for (int iy = 0; iy < p; ++iy)
        for (int ix = 0; ix < p; ++ix)
          state.u[grid.index(ix, iy)] =
              std::cos(kPi * x[ix]) * std::cos(kPi * x[iy]);
    }
    return state;
  }
  state.v.resize(grid.size());
  if (grid.dim() == 1) {
    for (int i = 0; i < p; ++i) {
      state.u[i] = gs_u_init_1d(x[i]);
      state.v[i] = gs_v_init_1d(x[i], spec.gs_vinit_squared);
    }
  } else {
    for (int iy = 0; iy < p; ++iy)
      for (int ix = 0; ix < p; ++ix) {
        const double v = gs_v_init_2d(x[ix], x[iy]);
        state.v[grid.index(ix, iy)] = v;
        state.u[grid.index(ix, iy)] = 1.0 - v;
      }
  }
  return state;
}

PceState ipce_initial_condition(const ModelSpec& spec, const PeriodicGrid& grid,
                                int degree) {
  PceState state(degree + 1, grid.size(), is_gray_scott(spec.kind));
  const FieldState det = initial_condition(spec, grid);
  std::copy(det.u.begin(), det.u.end(), state.coeff_u(0).begin());
  if (state.has_v)
    std::copy(det.v.begin(), det.v.end(), state.coeff_v(0).begin());
  return state;
}

void rhs_det(const ModelSpec& spec, double xi, std::span<const double> u,
             std::span<double> fu) {
  if (xi < spec.a || xi > spec.b)
    throw InvalidArgument("rhs_det: xi outside [a,b]");
  const std::size_t n = u.size();
  switch (spec.kind) {
  case ModelKind::Linear:
    for (std::size_t i = 0; i < n; ++i) fu[i] = -xi * u[i];
    break;
  case ModelKind::Quadratic:
    for (std::size_t i = 0; i < n; ++i) fu[i] = -xi * u[i] * u[i];
    break;
  case ModelKind::Cubic:
    for (std::size_t i = 0; i < n; ++i) fu[i] = -xi * u[i] * u[i] * u[i];
    break;
  case ModelKind::GrayScott:
    throw InvalidArgument("rhs_det: Gray-Scott needs rhs_det_gs");
  }
}

void rhs_det_gs(const ModelSpec& spec, double xi, std::span<const double> u,
                std::span<const double> v, std::span<double> fu,
                std::span<double> fv) {
  if (xi < spec.a || xi > spec.b)
    throw InvalidArgument("rhs_det_gs: xi outside [a,b]");
  const std::size_t n = u.size();
  const double F = spec.F;
  for (std::size_t i = 0; i < n; ++i) {
    const double uvv = u[i] * v[i] * v[i];
    fu[i] = -uvv + F * (1.0 - u[i]);
    fv[i] = uvv - (F + xi) * v[i];
  }
}

PceCoupling make_coupling(const ModelSpec& spec, int degree) {
  LegendreBasis basis(spec.a, spec.b, degree);
  GalerkinTensors weighted(basis, TensorWeight::Parameter);
  std::optional<GalerkinTensors> unit;
  if (is_gray_scott(spec.kind))
    unit.emplace(basis, TensorWeight::Unit);
  return PceCoupling{std::move(basis), std::move(weighted), std::move(unit)};
}

namespace {

// eta-outer contraction over symmetry-deduplicated index tuples.
void contract_linear(const GalerkinTensors& t, const PceState& s,
                     PceState& out) {
  const int n1 = t.degree() + 1;
  for (int eta = 0; eta < n1; ++eta) {
    auto o = out.coeff_u(eta);
    for (int i = 0; i < n1; ++i)
      kernels::axpy(-t.k2(i, eta), s.coeff_u(i), o);
  }
}

void contract_quadratic(const GalerkinTensors& t, const PceState& s,
                        PceState& out) {
  const int n1 = t.degree() + 1;
  for (int eta = 0; eta < n1; ++eta) {
    auto o = out.coeff_u(eta);
    for (int i = 0; i < n1; ++i)
      for (int j = i; j < n1; ++j) {
        const double mult = (i == j) ? 1.0 : 2.0;
        kernels::mul2_add(-mult * t.k3(i, j, eta), s.coeff_u(i), s.coeff_u(j),
                          o);
      }
  }
}

void contract_cubic(const GalerkinTensors& t, const PceState& s,
                    PceState& out) {
  const int n1 = t.degree() + 1;
  for (int eta = 0; eta < n1; ++eta) {
    auto o = out.coeff_u(eta);
    for (int i = 0; i < n1; ++i)
      for (int j = i; j < n1; ++j)
        for (int k = j; k < n1; ++k) {
          double mult = 6.0;
          if (i == j && j == k) mult = 1.0;
          else if (i == j || j == k) mult = 3.0;
          kernels::mul3_add(-mult * t.k4(i, j, k, eta), s.coeff_u(i),
                            s.coeff_u(j), s.coeff_u(k), o);
        }
  }
}

void contract_gray_scott(const GalerkinTensors& e4, const GalerkinTensors& k2,
                         double F, const PceState& s, PceState& out) {
  const int n1 = e4.degree() + 1;
  const std::size_t np = s.n_points;
  std::vector<double> mix(np);
  for (int eta = 0; eta < n1; ++eta) {
    std::fill(mix.begin(), mix.end(), 0.0);
    // E[P_i P_j P_k P_eta] u_i v_j v_k, symmetric in (j,k) only
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n1; ++j)
        for (int k = j; k < n1; ++k) {
          const double mult = (j == k) ? 1.0 : 2.0;
          kernels::mul3_add(mult * e4.k4(i, j, k, eta), s.coeff_u(i),
                            s.coeff_v(j), s.coeff_v(k), mix);
        }
    auto ou = out.coeff_u(eta);
    auto ov = out.coeff_v(eta);
    kernels::axpy(-1.0, mix, ou);
    kernels::axpy(1.0, mix, ov);
    // feed term F(1 - u) projects to F(delta_{eta,0} - u_eta)
    kernels::axpy(-F, s.coeff_u(eta), ou);
    if (eta == 0)
      for (std::size_t m = 0; m < np; ++m) ou[m] += F;
    // removal term -(F + k(w)) v
    kernels::axpy(-F, s.coeff_v(eta), ov);
    for (int i = 0; i < n1; ++i)
      kernels::axpy(-k2.k2(i, eta), s.coeff_v(i), ov);
  }
}

} // namespace

void rhs_ipce(const ModelSpec& spec, const PceCoupling& coupling,
              const PceState& state, PceState& out) {
  if (coupling.weighted.degree() + 1 != state.n_coeff)
    throw InvalidArgument("rhs_ipce: tensor degree does not match state");
  if (out.n_coeff != state.n_coeff || out.n_points != state.n_points)
    throw InvalidArgument("rhs_ipce: output shape mismatch");
  switch (spec.kind) {
  case ModelKind::Linear:
    contract_linear(coupling.weighted, state, out);
    break;
  case ModelKind::Quadratic:
    contract_quadratic(coupling.weighted, state, out);
    break;
  case ModelKind::Cubic:
    contract_cubic(coupling.weighted, state, out);
    break;
  case ModelKind::GrayScott:
    if (!coupling.unit)
      throw InvalidArgument("rhs_ipce: Gray-Scott coupling lacks unit tensors");
    contract_gray_scott(*coupling.unit, coupling.weighted, spec.F, state, out);
    break;
  }
}

SteadyStates steady_states(double F, double k, double alpha) {
  if (!(F > 0.0)) throw InvalidArgument("steady_states: F must be > 0");
  SteadyStates s;
  s.d = 1.0 - 4.0 * (F + k) * (F + k) / F;
  s.v_red = 0.0;
  if (s.d > 0.0) {
    s.v_blue = 0.5 * alpha * (1.0 + std::sqrt(s.d));
    s.v_1 = 0.5 * alpha * (1.0 - std::sqrt(s.d));
  }
  return s;
}

bool turing_condition(double F, double k, double v0) {
  const double lhs = 2.0 * (F + k) - (v0 * v0 + F);
  return lhs * lhs > 8.0 * (F + k) * (v0 * v0 - F);
}

} // namespace pcetd
