#pragma once

//==============================================================================
// Per-mode coefficients of the fourth-order exponential Runge-Kutta scheme.
// With z = h*lambda the update needs e^z, e^{z/2} and four bracket functions
// that all have removable singularities at z = 0:
//   Q  = h (e^{z/2}-1)/z
//   f1 = h (-4 - z + e^z(4 - 3z + z^2))/z^3
//   f2 = h ( 2 + z + e^z(-2 + z))/z^3
//   f3 = h (-4 - 3z - z^2 + e^z(4 - z))/z^3
// Direct evaluation cancels near z = 0, so each value is obtained as the mean
// over R-th roots of unity on the unit circle centred at z (trapezoidal
// contour rule, exponentially convergent); real parts are taken at the end.
//==============================================================================

#include <span>
#include <vector>

namespace pcetd {

struct EtdCoefficients {
  double h = 0.0;
  int contour_points = 0;
  std::vector<double> E;  // e^{h*lambda}
  std::vector<double> E2; // e^{h*lambda/2}
  std::vector<double> Q;
  std::vector<double> f1;
  std::vector<double> f2;
  std::vector<double> f3;
  double max_imag = 0.0; // largest |Im| discarded by the final real part
};

/// lambda holds the (already diffusion-scaled) linear symbol per mode.
/// Requires R >= 16.
EtdCoefficients build_etd_coefficients(std::span<const double> lambda,
                                       double h, int R = 32);

/// Direct-formula evaluation of one bracket coefficient at z = h*lambda, for
/// well-conditioned |z| (tests and cross-checks). index; 0=Q, 1=f1, 2=f2, 3=f3.
double etd_bracket_direct(int index, double lambda, double h);

} // namespace pcetd
