#include "pcetd/kernels.hpp"

#include "pcetd/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace pcetd::kernels {

namespace scalar {

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_into(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i];
}

void mul2_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<double> out) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) out[i] += c * u[i] * v[i];
}

void mul3_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<const double> w, std::span<double> out) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) out[i] += c * u[i] * v[i] * w[i];
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) {
    const double a = std::fabs(v);
    if (std::isnan(a)) return a;
    if (a > m) m = a;
  }
  return m;
}

double sum_sq(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

} // namespace scalar

#if defined(PCETD_HAVE_AVX2_TU)
namespace avx2 {
void axpy(double a, std::span<const double> x, std::span<double> y);
void scale_into(double a, std::span<const double> x, std::span<double> y);
void mul2_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<double> out);
void mul3_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<const double> w, std::span<double> out);
double max_abs(std::span<const double> x);
double sum_sq(std::span<const double> x);
} // namespace avx2
#endif

namespace {

struct Table {
  Isa isa;
  void (*axpy)(double, std::span<const double>, std::span<double>);
  void (*scale_into)(double, std::span<const double>, std::span<double>);
  void (*mul2_add)(double, std::span<const double>, std::span<const double>,
                   std::span<double>);
  void (*mul3_add)(double, std::span<const double>, std::span<const double>,
                   std::span<const double>, std::span<double>);
  double (*max_abs)(std::span<const double>);
  double (*sum_sq)(std::span<const double>);
};

constexpr Table kScalarTable{Isa::Scalar,     scalar::axpy,
                             scalar::scale_into, scalar::mul2_add,
                             scalar::mul3_add, scalar::max_abs,
                             scalar::sum_sq};

#if defined(PCETD_HAVE_AVX2_TU)
constexpr Table kAvx2Table{Isa::Avx2,        avx2::axpy,
                           avx2::scale_into, avx2::mul2_add,
                           avx2::mul3_add,   avx2::max_abs,
                           avx2::sum_sq};
#endif

bool host_has_avx2() {
#if defined(PCETD_HAVE_AVX2_TU) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Table* detect() {
#if defined(PCETD_HAVE_AVX2_TU)
  if (host_has_avx2() && std::getenv("PCETD_FORCE_SCALAR") == nullptr)
    return &kAvx2Table;
#endif
  return &kScalarTable;
}

const Table*& table_slot() {
  static const Table* t = detect();
  return t;
}

} // namespace

Isa active_isa() { return table_slot()->isa; }

const char* active_isa_name() {
  return active_isa() == Isa::Avx2 ? "avx2" : "scalar";
}

void force_isa(Isa isa) {
  if (isa == Isa::Scalar) {
    table_slot() = &kScalarTable;
    return;
  }
#if defined(PCETD_HAVE_AVX2_TU)
  if (host_has_avx2()) {
    table_slot() = &kAvx2Table;
    return;
  }
#endif
  throw InvalidArgument("force_isa: AVX2 not available on this host");
}

void reset_isa() { table_slot() = detect(); }

void axpy(double a, std::span<const double> x, std::span<double> y) {
  table_slot()->axpy(a, x, y);
}
void scale_into(double a, std::span<const double> x, std::span<double> y) {
  table_slot()->scale_into(a, x, y);
}
void mul2_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<double> out) {
  table_slot()->mul2_add(c, u, v, out);
}
void mul3_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<const double> w, std::span<double> out) {
  table_slot()->mul3_add(c, u, v, w, out);
}
double max_abs(std::span<const double> x) { return table_slot()->max_abs(x); }
double sum_sq(std::span<const double> x) { return table_slot()->sum_sq(x); }

} // namespace pcetd::kernels
