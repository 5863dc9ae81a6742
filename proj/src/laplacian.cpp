#include "pcetd/laplacian.hpp"

#include "pcetd/errors.hpp"

#include <cmath>
#include <cstring>

namespace pcetd {

FdLaplacian::FdLaplacian(const PeriodicGrid& grid) : grid_(grid) {}

namespace {

// One periodic stencil pass over a line of length p with the given stride.
inline void stencil_line(const double* in, double inv_h2, int p,
                         std::size_t stride, double* out) {
  out[0] = (in[(p - 1) * stride] - 2.0 * in[0] + in[stride]) * inv_h2;
  for (int i = 1; i < p - 1; ++i)
    out[i * stride] = (in[(i - 1) * stride] - 2.0 * in[i * stride] +
                       in[(i + 1) * stride]) *
                      inv_h2;
  out[(p - 1) * stride] =
      (in[(p - 2) * stride] - 2.0 * in[(p - 1) * stride] + in[0]) * inv_h2;
}

} // namespace

void FdLaplacian::apply_along_x(std::span<const double> in,
                                std::span<double> out) const {
  const int p = grid_.p();
  const double inv_h2 = 1.0 / (grid_.h() * grid_.h());
  if (grid_.dim() == 1) {
    stencil_line(in.data(), inv_h2, p, 1, out.data());
    return;
  }
  for (int iy = 0; iy < p; ++iy)
    stencil_line(in.data() + static_cast<std::size_t>(iy) * p, inv_h2, p, 1,
                 out.data() + static_cast<std::size_t>(iy) * p);
}

void FdLaplacian::apply_along_y(std::span<const double> in,
                                std::span<double> out) const {
  if (grid_.dim() != 2)
    throw InvalidArgument("apply_along_y: requires a 2D grid");
  const int p = grid_.p();
  const double inv_h2 = 1.0 / (grid_.h() * grid_.h());
  for (int ix = 0; ix < p; ++ix)
    stencil_line(in.data() + ix, inv_h2, p, p, out.data() + ix);
}

void FdLaplacian::apply(std::span<const double> in,
                        std::span<double> out) const {
  if (in.size() != grid_.size() || out.size() != grid_.size())
    throw InvalidArgument("FdLaplacian::apply: size mismatch");
  if (grid_.dim() == 1) {
    apply_along_x(in, out);
    return;
  }
  apply_along_x(in, out);
  std::vector<double> tmp(grid_.size());
  apply_along_y(in, tmp);
  for (std::size_t i = 0; i < tmp.size(); ++i) out[i] += tmp[i];
}

std::vector<std::vector<double>> FdLaplacian::dense() const {
  const std::size_t n = grid_.size();
  std::vector<std::vector<double>> mat(n, std::vector<double>(n, 0.0));
  std::vector<double> e(n, 0.0), col(n);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    apply(e, col);
    for (std::size_t i = 0; i < n; ++i) mat[i][j] = col[i];
    e[j] = 0.0;
  }
  return mat;
}

ShiftedSolver::ShiftedSolver(const PeriodicGrid& grid, double c)
    : p_(grid.p()), c_(c) {
  if (c < 0.0) throw InvalidArgument("ShiftedSolver: shift must be >= 0");
  const double h = grid.h();
  diag_ = 1.0 + 2.0 * c / (h * h);
  off_ = -c / (h * h);
  if (c_ == 0.0) return; // identity; nothing to factorize

  // Sherman-Morrison split: C = T + u v^T with u = (gamma,0,..,0,off),
  // v = (1,0,..,0,off/gamma); T is plain tridiagonal with first/last
  // diagonal entries adjusted.
  gamma_ = -diag_;
  std::vector<double> d(p_, diag_);
  d[0] = diag_ - gamma_;
  d[p_ - 1] = diag_ - off_ * off_ / gamma_;

  m_.resize(p_);
  m_[0] = d[0];
  for (int i = 1; i < p_; ++i) {
    if (std::fabs(m_[i - 1]) < 1e-300)
      throw NumericalFailure("ShiftedSolver: singular pivot", 0.0);
    m_[i] = d[i] - off_ * (off_ / m_[i - 1]);
  }

  // z = T^{-1} u
  std::vector<double> u(p_, 0.0);
  u[0] = gamma_;
  u[p_ - 1] = off_;
  z_.assign(p_, 0.0);
  thomas(u.data(), 1, z_);
  denom_ = 1.0 + z_[0] + (off_ / gamma_) * z_[p_ - 1];
  if (std::fabs(denom_) < 1e-300)
    throw NumericalFailure("ShiftedSolver: singular correction", 0.0);
}

void ShiftedSolver::thomas(const double* rhs, std::size_t stride,
                           std::vector<double>& y) const {
  y[0] = rhs[0];
  for (int i = 1; i < p_; ++i)
    y[i] = rhs[i * stride] - (off_ / m_[i - 1]) * y[i - 1];
  y[p_ - 1] /= m_[p_ - 1];
  for (int i = p_ - 2; i >= 0; --i) y[i] = (y[i] - off_ * y[i + 1]) / m_[i];
}

void ShiftedSolver::check_residual(const double* rhs, std::size_t stride,
                                   const double* x) const {
  double rnorm = 0.0, res = 0.0;
  for (int i = 0; i < p_; ++i) {
    const double xm = x[((i + p_ - 1) % p_) * stride];
    const double xp = x[((i + 1) % p_) * stride];
    const double ax = diag_ * x[i * stride] + off_ * (xm + xp);
    const double r = ax - rhs[i * stride];
    res += r * r;
    rnorm += rhs[i * stride] * rhs[i * stride];
  }
  if (!(std::sqrt(res) <= 1e-12 * std::sqrt(rnorm) + 1e-300))
    throw NumericalFailure("ShiftedSolver: residual bound violated",
                           std::sqrt(res));
}

void ShiftedSolver::solve_line(const double* rhs, std::size_t stride,
                               double* x) const {
  if (c_ == 0.0) {
    for (int i = 0; i < p_; ++i) x[i * stride] = rhs[i * stride];
    return;
  }
  std::vector<double> y(p_);
  thomas(rhs, stride, y);
  const double factor = (y[0] + (off_ / gamma_) * y[p_ - 1]) / denom_;
  for (int i = 0; i < p_; ++i) x[i * stride] = y[i] - factor * z_[i];
  check_residual(rhs, stride, x);
}

void ShiftedSolver::solve(std::span<const double> rhs,
                          std::span<double> x) const {
  if (rhs.size() != static_cast<std::size_t>(p_) || x.size() != rhs.size())
    throw InvalidArgument("ShiftedSolver::solve: size mismatch");
  solve_line(rhs.data(), 1, x.data());
}

void ShiftedSolver::solve_along_x(std::span<const double> rhs,
                                  std::span<double> x) const {
  const std::size_t n = static_cast<std::size_t>(p_) * p_;
  if (rhs.size() != n || x.size() != n)
    throw InvalidArgument("ShiftedSolver::solve_along_x: size mismatch");
  for (int iy = 0; iy < p_; ++iy)
    solve_line(rhs.data() + static_cast<std::size_t>(iy) * p_, 1,
               x.data() + static_cast<std::size_t>(iy) * p_);
}

void ShiftedSolver::solve_along_y(std::span<const double> rhs,
                                  std::span<double> x) const {
  const std::size_t n = static_cast<std::size_t>(p_) * p_;
  if (rhs.size() != n || x.size() != n)
    throw InvalidArgument("ShiftedSolver::solve_along_y: size mismatch");
  for (int ix = 0; ix < p_; ++ix)
    solve_line(rhs.data() + ix, p_, x.data() + ix);
}

} // namespace pcetd
