#pragma once

//==============================================================================
// Discrete Fourier transforms on the periodic grid and the diagonal symbol of
// the Laplacian. The domain has length 2, so the mode basis is e^{i pi j x}
// with integer j in (-p/2, p/2]; the forward kernel is e^{-i pi j x_n}. FFTW
// does the heavy lifting; a per-mode phase twist converts its e^{-2 pi i j n/p}
// kernel to ours. The symbol of the Laplacian on mode j is -(pi j)^2 (sum of
// the two directions in 2D).
//==============================================================================

#include "pcetd/grid.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace pcetd {

/// Diagonal Fourier representation of the Laplacian, stored in the transform's
/// bin order. Entry 0 is 0 and every other entry is strictly negative.
class SpectralSymbol {
public:
  explicit SpectralSymbol(const PeriodicGrid& grid);

  const std::vector<double>& diag() const { return diag_; }

  /// Signed integer frequency of a 1D bin index (p even): 0..p/2, then
  /// -p/2+1..-1.
  static int bin_frequency(int bin, int p);

private:
  std::vector<double> diag_;
};

enum class DealiasRule { TwoThirds, Quarter };

/// 1 for retained modes, 0 for zeroed ones, in bin order.
std::vector<std::uint8_t> dealias_mask(const PeriodicGrid& grid,
                                       DealiasRule rule);

/// Forward/inverse transforms between real grid functions and complex mode
/// coefficients. Round trip is the identity to ~1e-15, and Parseval holds with
/// factor p (p^2 in 2D). Plans are built once per grid; execution uses
/// per-call buffers.
class SpectralTransform {
public:
  explicit SpectralTransform(const PeriodicGrid& grid);
  ~SpectralTransform();

  SpectralTransform(const SpectralTransform&) = delete;
  SpectralTransform& operator=(const SpectralTransform&) = delete;

  const PeriodicGrid& grid() const { return grid_; }

  /// u-hat_j = sum_n u_n e^{-i pi j x_n}
  std::vector<std::complex<double>> forward(std::span<const double> u) const;
  void forward(std::span<const std::complex<double>> u,
               std::span<std::complex<double>> out) const;

  /// u_n = (1/p^d) sum_j u-hat_j e^{i pi j x_n}; real part of the inverse.
  std::vector<double> inverse(std::span<const std::complex<double>> uh) const;
  void inverse(std::span<const std::complex<double>> uh,
               std::span<std::complex<double>> out) const;

private:
  void twist(std::span<std::complex<double>> v) const;

  PeriodicGrid grid_;
  void* plan_fwd_; // fftw_plan, kept opaque here
  void* plan_bwd_;
};

} // namespace pcetd
