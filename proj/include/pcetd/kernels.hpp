#pragma once

//==============================================================================
// Elementwise array kernels used by the grid updates and Galerkin
// contractions. Every kernel has a scalar reference implementation and, on
// x86-64, an AVX2+FMA variant; the active variant is chosen once at runtime.
// Scalar and SIMD paths are equivalence-tested against each other.
//==============================================================================

#include <cstddef>
#include <span>

namespace pcetd::kernels {

enum class Isa { Scalar, Avx2 };

/// Instruction set the dispatcher resolved to (after force_isa, if any).
Isa active_isa();
const char* active_isa_name();

/// Pin dispatch to one implementation (tests); pass Scalar on any host.
/// Selecting Avx2 on a host without AVX2 throws.
void force_isa(Isa isa);
void reset_isa();

// y[i] += a * x[i]
void axpy(double a, std::span<const double> x, std::span<double> y);

// y[i] = a * x[i]
void scale_into(double a, std::span<const double> x, std::span<double> y);

// out[i] += c * u[i] * v[i]
void mul2_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<double> out);

// out[i] += c * u[i] * v[i] * w[i]
void mul3_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<const double> w, std::span<double> out);

// max_i |x[i]|  (NaN poisons the result to NaN)
double max_abs(std::span<const double> x);

// sum_i x[i]*x[i]
double sum_sq(std::span<const double> x);

// Reference implementations, always available (equivalence oracles).
namespace scalar {
void axpy(double a, std::span<const double> x, std::span<double> y);
void scale_into(double a, std::span<const double> x, std::span<double> y);
void mul2_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<double> out);
void mul3_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<const double> w, std::span<double> out);
double max_abs(std::span<const double> x);
double sum_sq(std::span<const double> x);
} // namespace scalar

} // namespace pcetd::kernels
