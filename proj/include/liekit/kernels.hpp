#pragma once

// Dense inner loops shared by every module. Each kernel has a scalar
// reference implementation and an AVX2 variant; the active table is chosen
// once at startup from CPUID and can be pinned (tests, LIEKIT_SIMD=scalar).

#include <cstddef>
#include <span>
#include <string_view>

namespace liekit::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  double (*dot)(const double *x, const double *y, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double *x, double *y, std::size_t n);
  // out = (x - y) * scale
  void (*scaled_diff)(const double *x, const double *y, double scale, double *out,
                      std::size_t n);
  double (*max_abs)(const double *x, std::size_t n);
  double (*max_abs_diff)(const double *x, const double *y, std::size_t n);
  // Row-major C(m x p) = A(m x k) * B(k x p). C must not alias A or B.
  void (*matmul)(const double *a, const double *b, double *c, std::size_t m,
                 std::size_t k, std::size_t p);
};

const KernelTable &scalar_table();
/// Returns nullptr when the build has no AVX2 variant.
const KernelTable *avx2_table();

bool cpu_supports(Isa isa);
Isa active_isa();
/// Pins the dispatch table. Throws InvalidArgument if the CPU lacks `isa`.
void set_isa(Isa isa);
std::string_view isa_name(Isa isa);

const KernelTable &active();

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline void scaled_diff(std::span<const double> x, std::span<const double> y,
                        double scale, std::span<double> out) {
  active().scaled_diff(x.data(), y.data(), scale, out.data(), x.size());
}
inline double max_abs(std::span<const double> x) {
  return active().max_abs(x.data(), x.size());
}
inline double max_abs_diff(std::span<const double> x, std::span<const double> y) {
  return active().max_abs_diff(x.data(), y.data(), x.size());
}

} // namespace liekit::kernels
