#include "liekit/kernels.hpp"

#include "liekit/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

using namespace liekit;

namespace {

std::vector<double> random_vec(std::mt19937_64 &g, std::size_t n) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> v(n);
  for (auto &x : v) x = u(g);
  return v;
}

} // namespace

TEST_CASE("scalar table is always present and selectable") {
  kernels::set_isa(kernels::Isa::Scalar);
  CHECK(kernels::active_isa() == kernels::Isa::Scalar);
  CHECK(&kernels::active() == &kernels::scalar_table());
  CHECK(kernels::isa_name(kernels::Isa::Scalar) == "scalar");
}

TEST_CASE("requesting an unsupported isa throws") {
  if (!kernels::cpu_supports(kernels::Isa::Avx2) || !kernels::avx2_table())
    CHECK_THROWS_AS(kernels::set_isa(kernels::Isa::Avx2), InvalidArgument);
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const kernels::KernelTable *v = kernels::avx2_table();
  if (!v || !kernels::cpu_supports(kernels::Isa::Avx2)) {
    MESSAGE("no AVX2 variant on this machine");
    return;
  }
  const kernels::KernelTable &s = kernels::scalar_table();
  std::mt19937_64 g(7);
  for (std::size_t n = 0; n <= 37; ++n) {
    CAPTURE(n);
    const auto x = random_vec(g, n), y = random_vec(g, n);

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale += std::fabs(x[i] * y[i]);
    CHECK(std::fabs(s.dot(x.data(), y.data(), n) - v->dot(x.data(), y.data(), n)) <=
          1e-14 * (scale + 1.0));

    auto ys = y, yv = y;
    s.axpy(0.7, x.data(), ys.data(), n);
    v->axpy(0.7, x.data(), yv.data(), n);
    CHECK(ys == yv);

    std::vector<double> os(n), ov(n);
    s.scaled_diff(x.data(), y.data(), 2.5, os.data(), n);
    v->scaled_diff(x.data(), y.data(), 2.5, ov.data(), n);
    CHECK(os == ov);

    CHECK(s.max_abs(x.data(), n) == v->max_abs(x.data(), n));
    CHECK(s.max_abs_diff(x.data(), y.data(), n) == v->max_abs_diff(x.data(), y.data(), n));
  }

  for (std::size_t m : {1u, 3u, 4u, 9u})
    for (std::size_t k : {1u, 2u, 5u, 9u})
      for (std::size_t p : {1u, 4u, 7u, 9u}) {
        const auto a = random_vec(g, m * k), b = random_vec(g, k * p);
        std::vector<double> cs(m * p), cv(m * p);
        s.matmul(a.data(), b.data(), cs.data(), m, k, p);
        v->matmul(a.data(), b.data(), cv.data(), m, k, p);
        for (std::size_t i = 0; i < m * p; ++i) CHECK(cs[i] == doctest::Approx(cv[i]).epsilon(1e-13));
      }
}

TEST_CASE("max kernels propagate NaN in both variants") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> x{1.0, 2.0, nan, 4.0, 5.0, 6.0}, y(6, 0.0);
  std::vector<const kernels::KernelTable *> tables{&kernels::scalar_table()};
  if (kernels::avx2_table() && kernels::cpu_supports(kernels::Isa::Avx2))
    tables.push_back(kernels::avx2_table());
  for (const auto *t : tables) {
    CHECK(std::isnan(t->max_abs(x.data(), x.size())));
    CHECK(std::isnan(t->max_abs_diff(x.data(), y.data(), x.size())));
    CHECK(t->max_abs(x.data(), 2) == 2.0);
  }
}
