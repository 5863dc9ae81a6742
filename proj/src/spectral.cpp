#include "pcetd/spectral.hpp"

#include "pcetd/errors.hpp"

#include <cmath>
#include <fftw3.h>

namespace pcetd {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void require_even(const PeriodicGrid& grid, const char* who) {
  if (grid.p() % 2 != 0)
    throw InvalidArgument(std::string(who) + ": p must be even");
}
} // namespace

int SpectralSymbol::bin_frequency(int bin, int p) {
  return bin <= p / 2 ? bin : bin - p;
}

SpectralSymbol::SpectralSymbol(const PeriodicGrid& grid) {
  require_even(grid, "SpectralSymbol");
  const int p = grid.p();
  diag_.resize(grid.size());
  if (grid.dim() == 1) {
    for (int b = 0; b < p; ++b) {
      const double j = bin_frequency(b, p);
      diag_[b] = -(kPi * j) * (kPi * j);
    }
  } else {
    for (int by = 0; by < p; ++by)
      for (int bx = 0; bx < p; ++bx) {
        const double j1 = bin_frequency(bx, p);
        const double j2 = bin_frequency(by, p);
        diag_[static_cast<std::size_t>(by) * p + bx] =
            -(kPi * j1) * (kPi * j1) - (kPi * j2) * (kPi * j2);
      }
  }
}

std::vector<std::uint8_t> dealias_mask(const PeriodicGrid& grid,
                                       DealiasRule rule) {
  require_even(grid, "dealias_mask");
  const int p = grid.p();
  const double cutoff = rule == DealiasRule::TwoThirds ? p / 3.0 : p / 4.0;
  std::vector<std::uint8_t> mask(grid.size(), 1);
  auto keep = [&](int bin) {
    return std::abs(SpectralSymbol::bin_frequency(bin, p)) <= cutoff;
  };
  if (grid.dim() == 1) {
    for (int b = 0; b < p; ++b) mask[b] = keep(b) ? 1 : 0;
  } else {
    for (int by = 0; by < p; ++by)
      for (int bx = 0; bx < p; ++bx)
        mask[static_cast<std::size_t>(by) * p + bx] =
            (keep(bx) && keep(by)) ? 1 : 0;
  }
  return mask;
}

SpectralTransform::SpectralTransform(const PeriodicGrid& grid) : grid_(grid) {
  require_even(grid, "SpectralTransform");
  const int p = grid.p();
  fftw_complex* buf =
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * grid.size()));
  if (grid.dim() == 1) {
    plan_fwd_ = fftw_plan_dft_1d(p, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_1d(p, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  } else {
    plan_fwd_ = fftw_plan_dft_2d(p, p, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_2d(p, p, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_free(buf);
}

SpectralTransform::~SpectralTransform() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

// Kernel conversion: e^{-i pi j x_n} = (-1)^j e^{-2 pi i j n / p} on the nodes
// x_n = -1 + 2n/p, so both directions carry the same (-1)^{j1(+j2)} factor.
void SpectralTransform::twist(std::span<std::complex<double>> v) const {
  const int p = grid_.p();
  if (grid_.dim() == 1) {
    for (int b = 1; b < p; b += 2) v[b] = -v[b];
  } else {
    for (int by = 0; by < p; ++by)
      for (int bx = (by % 2 == 0) ? 1 : 0; bx < p; bx += 2)
        v[static_cast<std::size_t>(by) * p + bx] =
            -v[static_cast<std::size_t>(by) * p + bx];
  }
}

void SpectralTransform::forward(std::span<const std::complex<double>> u,
                                std::span<std::complex<double>> out) const {
  if (u.size() != grid_.size() || out.size() != grid_.size())
    throw InvalidArgument("SpectralTransform::forward: size mismatch");
  fftw_complex* in =
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * u.size()));
  fftw_complex* ou =
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) {
    in[i][0] = u[i].real();
    in[i][1] = u[i].imag();
  }
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), in, ou);
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = std::complex<double>(ou[i][0], ou[i][1]);
  fftw_free(in);
  fftw_free(ou);
  twist(out);
}

std::vector<std::complex<double>>
SpectralTransform::forward(std::span<const double> u) const {
  if (u.size() != grid_.size())
    throw InvalidArgument("SpectralTransform::forward: size mismatch");
  std::vector<std::complex<double>> cu(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) cu[i] = u[i];
  std::vector<std::complex<double>> out(u.size());
  forward(cu, out);
  return out;
}

void SpectralTransform::inverse(std::span<const std::complex<double>> uh,
                                std::span<std::complex<double>> out) const {
  if (uh.size() != grid_.size() || out.size() != grid_.size())
    throw InvalidArgument("SpectralTransform::inverse: size mismatch");
  std::vector<std::complex<double>> tw(uh.begin(), uh.end());
  twist(tw);
  fftw_complex* in =
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * uh.size()));
  fftw_complex* ou =
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * uh.size()));
  for (std::size_t i = 0; i < uh.size(); ++i) {
    in[i][0] = tw[i].real();
    in[i][1] = tw[i].imag();
  }
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), in, ou);
  const double scale = 1.0 / static_cast<double>(grid_.size());
  for (std::size_t i = 0; i < uh.size(); ++i)
    out[i] = std::complex<double>(ou[i][0] * scale, ou[i][1] * scale);
  fftw_free(in);
  fftw_free(ou);
}

std::vector<double>
SpectralTransform::inverse(std::span<const std::complex<double>> uh) const {
  std::vector<std::complex<double>> out(uh.size());
  inverse(uh, out);
  std::vector<double> re(uh.size());
  for (std::size_t i = 0; i < uh.size(); ++i) re[i] = out[i].real();
  return re;
}

} // namespace pcetd
