#include "pcetd/etd_coefficients.hpp"

#include "pcetd/errors.hpp"

#include <cmath>
#include <complex>

namespace pcetd {

namespace {

using cplx = std::complex<double>;

cplx q_f(cplx z) { return (std::exp(0.5 * z) - 1.0) / z; }
cplx f1_f(cplx z) {
  return (-4.0 - z + std::exp(z) * (4.0 - 3.0 * z + z * z)) / (z * z * z);
}
cplx f2_f(cplx z) {
  return (2.0 + z + std::exp(z) * (-2.0 + z)) / (z * z * z);
}
cplx f3_f(cplx z) {
  return (-4.0 - 3.0 * z - z * z + std::exp(z) * (4.0 - z)) / (z * z * z);
}

} // namespace

EtdCoefficients build_etd_coefficients(std::span<const double> lambda,
                                       double h, int R) {
  if (R < 16) throw InvalidArgument("build_etd_coefficients: R must be >= 16");
  const std::size_t n = lambda.size();
  EtdCoefficients c;
  c.h = h;
  c.contour_points = R;
  c.E.resize(n);
  c.E2.resize(n);
  c.Q.resize(n);
  c.f1.resize(n);
  c.f2.resize(n);
  c.f3.resize(n);

  std::vector<cplx> roots(R);
  for (int r = 0; r < R; ++r) {
    const double th = 2.0 * M_PI * (r + 1) / R;
    roots[r] = cplx(std::cos(th), std::sin(th));
  }

  for (std::size_t i = 0; i < n; ++i) {
    const double z0 = h * lambda[i];
    c.E[i] = std::exp(z0);
    c.E2[i] = std::exp(0.5 * z0);
    cplx mq = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0;
    for (int r = 0; r < R; ++r) {
      const cplx z = z0 + roots[r];
      mq += q_f(z);
      m1 += f1_f(z);
      m2 += f2_f(z);
      m3 += f3_f(z);
    }
    const double inv = 1.0 / R;
    mq *= inv;
    m1 *= inv;
    m2 *= inv;
    m3 *= inv;
    const double im = std::max(std::max(std::fabs(mq.imag()), std::fabs(m1.imag())),
                               std::max(std::fabs(m2.imag()), std::fabs(m3.imag())));
    if (im > c.max_imag) c.max_imag = im;
    c.Q[i] = h * mq.real();
    c.f1[i] = h * m1.real();
    c.f2[i] = h * m2.real();
    c.f3[i] = h * m3.real();
  }
  return c;
}

double etd_bracket_direct(int index, double lambda, double h) {
  const cplx z(h * lambda, 0.0);
  switch (index) {
  case 0: return h * q_f(z).real();
  case 1: return h * f1_f(z).real();
  case 2: return h * f2_f(z).real();
  case 3: return h * f3_f(z).real();
  default: throw InvalidArgument("etd_bracket_direct: index must be 0..3");
  }
}

} // namespace pcetd
