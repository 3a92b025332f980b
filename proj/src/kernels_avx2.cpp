// Compiled with -mavx2 when LIEKIT_AVX2 is on; only reached after a
// CPUID check in kernels_dispatch.cpp.
#include "liekit/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace liekit::kernels {
namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, sh));
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

double dot(const double *x, const double *y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double alpha, const double *x, double *y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scaled_diff(const double *x, const double *y, double scale, double *out,
                 std::size_t n) {
  const __m256d vs = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(d, vs));
  }
  for (; i < n; ++i) out[i] = (x[i] - y[i]) * scale;
}

// _mm256_max_pd drops NaN operands, so NaN is tracked with an unordered compare.
double max_abs_impl(const double *x, const double *y, std::size_t n) {
  __m256d m = _mm256_setzero_pd();
  __m256d nan_seen = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    if (y) v = _mm256_sub_pd(v, _mm256_loadu_pd(y + i));
    v = _mm256_and_pd(v, kAbsMask);
    nan_seen = _mm256_or_pd(nan_seen, _mm256_cmp_pd(v, v, _CMP_UNORD_Q));
    m = _mm256_max_pd(m, v);
  }
  if (_mm256_movemask_pd(nan_seen)) return std::nan("");
  double r = hmax(m);
  for (; i < n; ++i) {
    double v = std::fabs(y ? x[i] - y[i] : x[i]);
    if (std::isnan(v)) return v;
    if (v > r) r = v;
  }
  return r;
}

double max_abs(const double *x, std::size_t n) { return max_abs_impl(x, nullptr, n); }

double max_abs_diff(const double *x, const double *y, std::size_t n) {
  return max_abs_impl(x, y, n);
}

void matmul(const double *a, const double *b, double *c, std::size_t m,
            std::size_t k, std::size_t p) {
  for (std::size_t i = 0; i < m * p; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) axpy(a[i * k + l], b + l * p, c + i * p, p);
}

} // namespace

const KernelTable *avx2_table() {
  static const KernelTable table{dot, axpy, scaled_diff, max_abs, max_abs_diff, matmul};
  return &table;
}

} // namespace liekit::kernels
