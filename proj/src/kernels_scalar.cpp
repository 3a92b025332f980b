#include "liekit/kernels.hpp"

#include <cmath>

namespace liekit::kernels {
namespace {

double dot(const double *x, const double *y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double alpha, const double *x, double *y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scaled_diff(const double *x, const double *y, double scale, double *out,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (x[i] - y[i]) * scale;
}

// NaN compares false, so both max kernels report NaN explicitly.
double max_abs(const double *x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::fabs(x[i]);
    if (std::isnan(v)) return v;
    if (v > m) m = v;
  }
  return m;
}

double max_abs_diff(const double *x, const double *y, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::fabs(x[i] - y[i]);
    if (std::isnan(v)) return v;
    if (v > m) m = v;
  }
  return m;
}

void matmul(const double *a, const double *b, double *c, std::size_t m,
            std::size_t k, std::size_t p) {
  for (std::size_t i = 0; i < m * p; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) axpy(a[i * k + l], b + l * p, c + i * p, p);
}

} // namespace

const KernelTable &scalar_table() {
  static const KernelTable table{dot, axpy, scaled_diff, max_abs, max_abs_diff, matmul};
  return table;
}

} // namespace liekit::kernels
