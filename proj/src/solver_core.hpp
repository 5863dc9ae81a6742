#pragma once

// Internal stepping cores shared by the deterministic and iPCE solvers, so a
// single-coefficient PCE run takes exactly the same arithmetic path as the
// corresponding deterministic run.

#include "pcetd/errors.hpp"
#include "pcetd/etd_coefficients.hpp"
#include "pcetd/kernels.hpp"
#include "pcetd/spectral.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pcetd::detail {

using CplxField = std::vector<std::complex<double>>;
using RealFields = std::vector<std::vector<double>>;

inline void check_finite(std::span<const double> field, double threshold,
                         int step, double t, const char* scheme) {
  const double m = kernels::max_abs(field);
  if (!(m <= threshold))
    throw BlowUpError(std::string(scheme) + ": state blew up at step " +
                          std::to_string(step) + " (t = " + std::to_string(t) +
                          ")",
                      step, t);
}

// ETD-RDP bracket vectors: b1 = 9u + 2k fu + k fs, b2 = 8u + 1.5k fu + 0.5k fs
inline void rdp_brackets(std::span<const double> u, std::span<const double> fu,
                         std::span<const double> fs, double k,
                         std::span<double> b1, std::span<double> b2) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) {
    b1[i] = 9.0 * u[i] + 2.0 * k * fu[i] + k * fs[i];
    b2[i] = 8.0 * u[i] + 1.5 * k * fu[i] + 0.5 * k * fs[i];
  }
}

inline void sub_into(std::span<const double> x, std::span<const double> y,
                     std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] - y[i];
}

// Multi-channel spectral ETDRK4. Each channel is one complex mode field with
// its own coefficient table (channels of one species share a table). The
// nonlinear term is evaluated in physical space across all channels at once.
class Etdrk4Core {
public:
  const SpectralTransform* transform = nullptr;
  std::vector<const EtdCoefficients*> coeffs; // one per channel
  const std::vector<std::uint8_t>* mask = nullptr;
  // rhs_phys(phys_in, rhs_out): both sized [channels][points]; rhs_out is
  // zero-initialized before the call.
  std::function<void(const RealFields&, RealFields&)> rhs_phys;

  std::size_t channels() const { return coeffs.size(); }

  void init_workspace() {
    const std::size_t C = channels();
    const std::size_t n = transform->grid().size();
    phys_.assign(C, std::vector<double>(n));
    rhs_.assign(C, std::vector<double>(n));
    tmp_.assign(n, 0.0);
    for (auto* f : {&Nu_, &Na_, &Nb_, &Nc_, &a_, &b_, &c_})
      f->assign(C, CplxField(n));
  }

  void to_physical(const std::vector<CplxField>& U, RealFields& phys) const {
    for (std::size_t c = 0; c < U.size(); ++c)
      phys[c] = transform->inverse(U[c]);
  }

  void step(std::vector<CplxField>& U) {
    const std::size_t C = channels();
    const std::size_t n = transform->grid().size();
    nonlinear(U, Nu_);
    for (std::size_t c = 0; c < C; ++c) {
      const auto& cf = *coeffs[c];
      for (std::size_t i = 0; i < n; ++i)
        a_[c][i] = cf.E2[i] * U[c][i] + cf.Q[i] * Nu_[c][i];
    }
    nonlinear(a_, Na_);
    for (std::size_t c = 0; c < C; ++c) {
      const auto& cf = *coeffs[c];
      for (std::size_t i = 0; i < n; ++i)
        b_[c][i] = cf.E2[i] * U[c][i] + cf.Q[i] * Na_[c][i];
    }
    nonlinear(b_, Nb_);
    for (std::size_t c = 0; c < C; ++c) {
      const auto& cf = *coeffs[c];
      for (std::size_t i = 0; i < n; ++i)
        c_[c][i] = cf.E2[i] * a_[c][i] + cf.Q[i] * (2.0 * Nb_[c][i] - Nu_[c][i]);
    }
    nonlinear(c_, Nc_);
    for (std::size_t c = 0; c < C; ++c) {
      const auto& cf = *coeffs[c];
      for (std::size_t i = 0; i < n; ++i)
        U[c][i] = cf.E[i] * U[c][i] + cf.f1[i] * Nu_[c][i] +
                  2.0 * cf.f2[i] * (Na_[c][i] + Nb_[c][i]) +
                  cf.f3[i] * Nc_[c][i];
    }
  }

private:
  // N-hat(U) = mask . F( inverse( mask . U ) )
  void nonlinear(const std::vector<CplxField>& U, std::vector<CplxField>& out) {
    const std::size_t n = transform->grid().size();
    CplxField masked(n);
    for (std::size_t c = 0; c < U.size(); ++c) {
      for (std::size_t i = 0; i < n; ++i)
        masked[i] = (*mask)[i] ? U[c][i] : 0.0;
      phys_[c] = transform->inverse(masked);
    }
    for (auto& r : rhs_) std::fill(r.begin(), r.end(), 0.0);
    rhs_phys(phys_, rhs_);
    for (std::size_t c = 0; c < U.size(); ++c) {
      out[c] = transform->forward(rhs_[c]);
      for (std::size_t i = 0; i < n; ++i)
        if (!(*mask)[i]) out[c][i] = 0.0;
    }
  }

  RealFields phys_, rhs_;
  std::vector<double> tmp_;
  std::vector<CplxField> Nu_, Na_, Nb_, Nc_, a_, b_, c_;
};

} // namespace pcetd::detail
