#pragma once

//==============================================================================
// Periodic uniform grids on (-1,1)^d, d = 1,2. Nodes x_i = -1 + 2i/p exclude
// the right endpoint (x_p is identified with x_0), so a 1D grid function has
// exactly p unknowns and h*p = 2.
//==============================================================================

#include <cstddef>
#include <vector>

namespace pcetd {

class PeriodicGrid {
public:
  /// dim must be 1 or 2; p >= 3 points per dimension.
  PeriodicGrid(int dim, int p);

  int dim() const { return dim_; }
  int p() const { return p_; }
  double h() const { return 2.0 / p_; }

  /// Number of unknowns: p in 1D, p*p in 2D.
  std::size_t size() const;

  /// Node coordinates along one dimension, length p.
  const std::vector<double>& nodes() const { return nodes_; }

  /// Row-major index of a 2D node (ix fastest).
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * p_ + ix;
  }

private:
  int dim_;
  int p_;
  std::vector<double> nodes_;
};

} // namespace pcetd
