#pragma once

//==============================================================================
// Second-order periodic finite-difference Laplacian and the shifted solves
// (I + c*A)x = r with A = -Laplacian, the building block of the ETD-RDP
// schemes. The shifted matrix is circulant tridiagonal; it is factorized once
// (cyclic Thomas via a rank-one update) and the factorization is reused for
// every right-hand side.
//==============================================================================

#include "pcetd/grid.hpp"

#include <span>
#include <vector>

namespace pcetd {

/// (Laplacian u)_i = (u_{i-1} - 2 u_i + u_{i+1})/h^2 with periodic wraparound;
/// in 2D the Kronecker sum of two 1D operators. Row sums are zero and the
/// operator is symmetric.
class FdLaplacian {
public:
  explicit FdLaplacian(const PeriodicGrid& grid);

  const PeriodicGrid& grid() const { return grid_; }

  /// out = Laplacian(in); sizes must match grid.size().
  void apply(std::span<const double> in, std::span<double> out) const;

  /// 1D stencil along x only / along y only (2D grids).
  void apply_along_x(std::span<const double> in, std::span<double> out) const;
  void apply_along_y(std::span<const double> in, std::span<double> out) const;

  /// Dense matrix of the operator, for small-p assertions.
  std::vector<std::vector<double>> dense() const;

private:
  PeriodicGrid grid_;
};

/// Cached factorization of (I + c*A_p) with A_p = -Laplacian_1d, c >= 0.
/// Solves are O(p) per line; in 2D the same 1D factorization is applied line
/// by line along either dimension. Immutable after construction.
class ShiftedSolver {
public:
  ShiftedSolver(const PeriodicGrid& grid, double c);

  double shift() const { return c_; }

  /// Solve (I + c*A_p) x = rhs on a 1D grid function (length p).
  void solve(std::span<const double> rhs, std::span<double> x) const;

  /// Line solves on a p*p row-major field.
  void solve_along_x(std::span<const double> rhs, std::span<double> x) const;
  void solve_along_y(std::span<const double> rhs, std::span<double> x) const;

private:
  void solve_line(const double* rhs, std::size_t stride, double* x) const;
  void thomas(const double* rhs, std::size_t stride,
              std::vector<double>& y) const;
  void check_residual(const double* rhs, std::size_t stride,
                      const double* x) const;

  int p_;
  double c_;
  double diag_;  // 1 + 2c/h^2
  double off_;   // -c/h^2
  double gamma_; // rank-one split parameter
  std::vector<double> m_;   // Thomas pivots of the split tridiagonal
  std::vector<double> z_;   // T^{-1} u for the Sherman-Morrison correction
  double denom_;            // 1 + v.z
};

} // namespace pcetd
