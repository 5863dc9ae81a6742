// AVX2+FMA kernel variants. Compiled with -mavx2 -mfma; only reached through
// the runtime dispatcher after a cpuid check.

#include <cmath>
#include <cstddef>
#include <immintrin.h>
#include <span>

namespace pcetd::kernels::avx2 {

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(&y[i]);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(&x[i]), vy);
    _mm256_storeu_pd(&y[i], vy);
  }
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void scale_into(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(&y[i], _mm256_mul_pd(va, _mm256_loadu_pd(&x[i])));
  for (; i < n; ++i) y[i] = a * x[i];
}

void mul2_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<double> out) {
  const std::size_t n = u.size();
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod =
        _mm256_mul_pd(_mm256_loadu_pd(&u[i]), _mm256_loadu_pd(&v[i]));
    __m256d vo = _mm256_loadu_pd(&out[i]);
    vo = _mm256_fmadd_pd(vc, prod, vo);
    _mm256_storeu_pd(&out[i], vo);
  }
  for (; i < n; ++i) out[i] = std::fma(c, u[i] * v[i], out[i]);
}

void mul3_add(double c, std::span<const double> u, std::span<const double> v,
              std::span<const double> w, std::span<double> out) {
  const std::size_t n = u.size();
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d prod =
        _mm256_mul_pd(_mm256_loadu_pd(&u[i]), _mm256_loadu_pd(&v[i]));
    prod = _mm256_mul_pd(prod, _mm256_loadu_pd(&w[i]));
    __m256d vo = _mm256_loadu_pd(&out[i]);
    vo = _mm256_fmadd_pd(vc, prod, vo);
    _mm256_storeu_pd(&out[i], vo);
  }
  for (; i < n; ++i) out[i] = std::fma(c, u[i] * v[i] * w[i], out[i]);
}

double max_abs(std::span<const double> x) {
  const std::size_t n = x.size();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d vmax = _mm256_setzero_pd();
  bool any_nan = false;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(&x[i]));
    // unordered compare flags NaN lanes
    const __m256d isnan = _mm256_cmp_pd(va, va, _CMP_UNORD_Q);
    if (_mm256_movemask_pd(isnan) != 0) any_nan = true;
    vmax = _mm256_max_pd(vmax, va);
  }
  alignas(32) double tmp[4];
  _mm256_store_pd(tmp, vmax);
  double m = std::max(std::max(tmp[0], tmp[1]), std::max(tmp[2], tmp[3]));
  for (; i < n; ++i) {
    const double a = std::fabs(x[i]);
    if (std::isnan(a)) any_nan = true;
    if (a > m) m = a;
  }
  return any_nan ? std::nan("") : m;
}

double sum_sq(std::span<const double> x) {
  const std::size_t n = x.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(&x[i]);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double tmp[4];
  _mm256_store_pd(tmp, acc);
  double s = (tmp[0] + tmp[1]) + (tmp[2] + tmp[3]);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

} // namespace pcetd::kernels::avx2
