#include "liekit/group.hpp"

#include "liekit/catalog.hpp"
#include "liekit/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace liekit;

namespace {

GroupChart affine_chart(std::optional<VecMap> hint = std::nullopt) {
  return GroupChart(
      "affine", 2,
      [](std::span<const double> a, std::span<const double> b) {
        return Vec{a[0] * b[0], a[0] * b[1] + a[1]};
      },
      Vec{1.0, 0.0}, std::move(hint), 0.9);
}

} // namespace

TEST_CASE("chart construction validates its inputs") {
  const BiMap add = [](std::span<const double> a, std::span<const double> b) {
    return Vec{a[0] + b[0]};
  };
  CHECK_THROWS_AS(GroupChart("x", 0, add, Vec{}), InvalidArgument);
  CHECK_THROWS_AS(GroupChart("x", 1, add, Vec{0.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(GroupChart("x", 1, add, Vec{0.0}, std::nullopt, -1.0), InvalidArgument);
}

TEST_CASE("compose rejects non-finite output") {
  const GroupChart g("bad", 1,
                     [](std::span<const double> a, std::span<const double> b) {
                       return Vec{a[0] / (b[0] - 1.0)};
                     },
                     Vec{0.0});
  CHECK_THROWS_AS(g.compose(Vec{1.0}, Vec{1.0}), NonFiniteEvaluation);
}

TEST_CASE("Newton inverse matches the affine closed form") {
  const GroupChart g = affine_chart();
  const Vec a{1.3, -0.4};
  const Vec ai = inverse(g, a);
  CHECK(ai[0] == doctest::Approx(1.0 / 1.3).epsilon(1e-12));
  CHECK(ai[1] == doctest::Approx(0.4 / 1.3).epsilon(1e-12));
}

TEST_CASE("inverse hint is used when present") {
  bool used = false;
  const GroupChart g = affine_chart([&used](std::span<const double> a) {
    used = true;
    return Vec{1.0 / a[0], -a[1] / a[0]};
  });
  inverse(g, Vec{1.1, 0.1});
  CHECK(used);
}

TEST_CASE("Newton inverse reports failure on a chart without inverses") {
  const GroupChart g("squash", 1,
                     [](std::span<const double> a, std::span<const double> b) {
                       return Vec{a[0] * a[0] + b[0] * b[0]};
                     },
                     Vec{0.0});
  CHECK_THROWS_AS(inverse(g, Vec{0.5}), NumericalError);
}

TEST_CASE("affine basic operators against hand-derived forms") {
  const GroupChart g = affine_chart();
  const Vec a{1.5, 0.3};
  const BasicOperators o = basic_operators(g, a, DiffConfig{});
  CHECK(max_abs_diff(o.psi_l, RealMatrix::from_rows({{1.5, 0.0}, {0.3, 1.0}})) < 1e-9);
  CHECK(max_abs_diff(o.psi_r, RealMatrix::from_rows({{1.5, 0.0}, {0.0, 1.5}})) < 1e-9);
  CHECK(max_abs_diff(o.lambda_l * o.psi_l, RealMatrix::identity(2)) < 1e-12);
  CHECK(max_abs_diff(o.lambda_r, RealMatrix::from_rows({{1 / 1.5, 0.0}, {0.0, 1 / 1.5}})) <
        1e-9);
}

TEST_CASE("operators at the identity are the identity") {
  for (const auto &name : catalog_group_names()) {
    CAPTURE(name);
    const CatalogEntry e = get_group(name);
    const BasicOperators o = basic_operators(*e.chart, e.chart->identity(), DiffConfig{});
    const RealMatrix id = RealMatrix::identity(e.chart->dim());
    CHECK(max_abs_diff(o.psi_l, id) < 1e-9);
    CHECK(max_abs_diff(o.psi_r, id) < 1e-9);
  }
}

TEST_CASE("transport pushes a tangent vector with psi") {
  const GroupChart g = affine_chart();
  const Vec a{1.2, 0.5}, alpha{1.0, 0.0};
  const TangentVector v = transport(g, a, alpha, Flavor::Left, DiffConfig{});
  CHECK(v.components[0] == doctest::Approx(1.2));
  CHECK(v.components[1] == doctest::Approx(0.5));
  CHECK(v.base == a);
}

TEST_CASE("sampled points stay in the trust region with their inverses") {
  const GroupChart g = affine_chart();
  DiffConfig cfg;
  Sampler s(3, "test");
  for (int i = 0; i < 50; ++i) {
    const Vec a = sample_point(g, s, cfg);
    CHECK(g.within(a));
    CHECK(g.within(inverse(g, a, cfg)));
  }
}

TEST_CASE("chart axioms and every shift identity hold on each catalog group") {
  DiffConfig cfg;
  cfg.sample_count = 8;
  for (const auto &name : catalog_group_names()) {
    CAPTURE(name);
    const CatalogEntry e = get_group(name);
    CheckReport r = verify_chart(*e.chart, cfg);
    r.append(verify_shift_identities(*e.chart, cfg, 1e-4));
    CHECK(r.checks.size() == 25);
    for (const auto &c : r.checks) {
      CAPTURE(c.id);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("a broken composition law fails associativity") {
  const GroupChart g("skewed", 1,
                     [](std::span<const double> a, std::span<const double> b) {
                       return Vec{a[0] + b[0] + a[0] * a[0] * b[0]};
                     },
                     Vec{0.0});
  DiffConfig cfg;
  cfg.sample_count = 5;
  const CheckReport r = verify_chart(g, cfg);
  CHECK(r.at("chart_unit").pass);
  CHECK_FALSE(r.at("chart_associativity").pass);
}
