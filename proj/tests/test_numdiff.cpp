#include "liekit/numdiff.hpp"

#include "liekit/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace liekit;

TEST_CASE("config validation") {
  DiffConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.h == doctest::Approx(std::cbrt(std::numeric_limits<double>::epsilon())));
  c.h = 0.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = DiffConfig{};
  c.rank_tol = 1.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = DiffConfig{};
  c.sample_count = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("relative step scales with the coordinate") {
  DiffConfig c;
  CHECK(c.step_for(0.1) == c.h);
  CHECK(c.step_for(-4.0) == doctest::Approx(4.0 * c.h));
  c.step_mode = StepMode::Absolute;
  CHECK(c.step_for(-4.0) == c.h);
  CHECK(c.second_order().h == doctest::Approx(std::pow(c.h, 0.75)));
}

TEST_CASE("matrix construction rejects non-finite data and bad sizes") {
  CHECK_THROWS_AS(RealMatrix(1, 2, {1.0, std::nan("")}), NonFiniteEvaluation);
  CHECK_THROWS_AS(RealMatrix(2, 2, {1.0}), InvalidArgument);
}

TEST_CASE("matrix algebra") {
  const RealMatrix a = RealMatrix::from_rows({{1, 2}, {3, 4}});
  const RealMatrix b = RealMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == RealMatrix::from_rows({{2, 1}, {4, 3}}));
  CHECK(a.transpose()(0, 1) == 3.0);
  CHECK(a.norm_inf() == 7.0);
  const Vec v{1.0, -1.0};
  CHECK(a * v == Vec{-1.0, -1.0});
  CHECK(left_multiply(v, a) == Vec{-2.0, -2.0});
  CHECK(a.column(1) == Vec{2.0, 4.0});
}

TEST_CASE("kron follows the row-major block convention") {
  const RealMatrix a = RealMatrix::from_rows({{1, 2}, {3, 4}});
  const RealMatrix e = RealMatrix::identity(2);
  const RealMatrix k = kron(a, e);
  // (alpha, gamma) -> alpha * 2 + gamma
  CHECK(k(0 * 2 + 1, 1 * 2 + 1) == 2.0);
  CHECK(k(1 * 2 + 0, 0 * 2 + 0) == 3.0);
  CHECK(k(0, 1) == 0.0);
  const RealMatrix bd = block_diag(a, RealMatrix::identity(1));
  CHECK(bd.rows() == 3);
  CHECK(bd(2, 2) == 1.0);
  CHECK(bd(0, 2) == 0.0);
}

TEST_CASE("jacobian of a polynomial map") {
  const VecMap f = [](std::span<const double> x) {
    return Vec{x[0] * x[0] * x[1], std::sin(x[1])};
  };
  const Vec at{0.7, -0.3};
  const RealMatrix j = jacobian(f, at, DiffConfig{});
  CHECK(j(0, 0) == doctest::Approx(2 * 0.7 * -0.3).epsilon(1e-9));
  CHECK(j(0, 1) == doctest::Approx(0.49).epsilon(1e-9));
  CHECK(j(1, 0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(j(1, 1) == doctest::Approx(std::cos(-0.3)).epsilon(1e-9));
}

TEST_CASE("jacobian reports non-finite evaluations") {
  const VecMap f = [](std::span<const double> x) { return Vec{1.0 / (x[0] - x[0])}; };
  CHECK_THROWS_AS(jacobian(f, Vec{1.0}, DiffConfig{}), NonFiniteEvaluation);
}

TEST_CASE("mixed second derivative of the affine composition law") {
  const BiMap phi = [](std::span<const double> a, std::span<const double> b) {
    return Vec{a[0] * b[0], a[0] * b[1] + a[1]};
  };
  const Vec e{1.0, 0.0};
  const Tensor3 t = mixed_second(phi, e, e, DiffConfig{});
  CHECK(t(0, 0, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(t(1, 0, 1) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::fabs(t(1, 1, 0)) < 1e-6);
  CHECK(std::fabs(t(0, 1, 1)) < 1e-6);
}

TEST_CASE("vector field commutator") {
  // X_a = d/dx, X_b = x d/dy: [X_a, X_b] = d/dy
  const VecMap xa = [](std::span<const double>) { return Vec{1.0, 0.0}; };
  const VecMap xb = [](std::span<const double> p) { return Vec{0.0, p[0]}; };
  const Vec c = vf_commutator(xa, xb, Vec{0.4, 0.2}, DiffConfig{});
  CHECK(std::fabs(c[0]) < 1e-9);
  CHECK(c[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("numeric rank") {
  CHECK(numeric_rank(RealMatrix(3, 2), 1e-8) == 0);
  CHECK(numeric_rank(RealMatrix::from_rows({{1, 1}, {2, 2}, {3, 3}}), 1e-8) == 1);
  CHECK(numeric_rank(RealMatrix::from_rows({{1, 0}, {0, 1e-12}}), 1e-8) == 1);
  CHECK(numeric_rank(RealMatrix::identity(4), 1e-8) == 4);
}

TEST_CASE("inversion") {
  const RealMatrix a = RealMatrix::from_rows({{0, 2, 1}, {1, 0, 0}, {3, 1, 4}});
  const RealMatrix ai = invert(a);
  CHECK(max_abs_diff(a * ai, RealMatrix::identity(3)) < 1e-14);
  CHECK_THROWS_AS(invert(RealMatrix::from_rows({{1, 2}, {2, 4}})), SingularMatrix);
}

TEST_CASE("sampler streams are reproducible and independent") {
  Sampler a(42, "x"), b(42, "x"), c(42, "y"), d(43, "x");
  const double va = a.uniform(0, 1);
  CHECK(va == b.uniform(0, 1));
  CHECK(va != c.uniform(0, 1));
  CHECK(va != d.uniform(0, 1));
  Sampler s(1, "ball");
  const Vec ctr{1.0, -2.0};
  for (int i = 0; i < 100; ++i) {
    const Vec p = s.in_ball(ctr, 0.2);
    CHECK(max_abs_diff(p, ctr) <= 0.2);
  }
}
