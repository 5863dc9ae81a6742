#pragma once

//==============================================================================
// Stacked PCE coefficient state: fields u_0..u_N stored coefficient-major
// (each coefficient field contiguous), plus a second species for Gray-Scott.
//==============================================================================

#include <cstddef>
#include <span>
#include <vector>

namespace pcetd {

struct PceState {
  double t = 0.0;
  int n_coeff = 0;        // N+1
  std::size_t n_points = 0;
  bool has_v = false;
  std::vector<double> u;  // (N+1) * n_points
  std::vector<double> v;  // same, when has_v

  PceState() = default;
  PceState(int num_coeff, std::size_t points, bool two_species)
      : n_coeff(num_coeff), n_points(points), has_v(two_species),
        u(static_cast<std::size_t>(num_coeff) * points, 0.0),
        v(two_species ? static_cast<std::size_t>(num_coeff) * points : 0,
          0.0) {}

  std::span<double> coeff_u(int i) {
    return {u.data() + static_cast<std::size_t>(i) * n_points, n_points};
  }
  std::span<const double> coeff_u(int i) const {
    return {u.data() + static_cast<std::size_t>(i) * n_points, n_points};
  }
  std::span<double> coeff_v(int i) {
    return {v.data() + static_cast<std::size_t>(i) * n_points, n_points};
  }
  std::span<const double> coeff_v(int i) const {
    return {v.data() + static_cast<std::size_t>(i) * n_points, n_points};
  }
};

} // namespace pcetd
