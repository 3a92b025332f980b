#include "liekit/flows.hpp"

#include "liekit/catalog.hpp"
#include "liekit/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace liekit;

TEST_CASE("nilpotent gl:2 flow is 1 + t alpha") {
  const CatalogEntry e = get_group("gl:2");
  const Vec alpha{0.0, 0.8, 0.0, 0.0};
  for (Flavor f : {Flavor::Left, Flavor::Right}) {
    const FlowResult r = one_param_subgroup(*e.chart, alpha, 1.0, 1000, f, DiffConfig{});
    CHECK(r.path.size() == 1001);
    CHECK(max_abs_diff(r.end(), Vec{1.0, 0.8, 0.0, 1.0}) < 1e-8);
  }
}

TEST_CASE("diagonal gl:2 flow is the exponential") {
  const CatalogEntry e = get_group("gl:2");
  const Vec alpha{0.3, 0.0, 0.0, -0.2};
  const FlowResult r = one_param_subgroup(*e.chart, alpha, 1.0, 500, Flavor::Right, DiffConfig{});
  CHECK(r.end()[0] == doctest::Approx(std::exp(0.3)).epsilon(1e-8));
  CHECK(r.end()[3] == doctest::Approx(std::exp(-0.2)).epsilon(1e-8));
}

TEST_CASE("zero generator stays at the identity") {
  const CatalogEntry e = get_group("affine");
  const FlowResult r = one_param_subgroup(*e.chart, Vec{0.0, 0.0}, 1.0, 10, Flavor::Left, DiffConfig{});
  CHECK(r.end() == e.chart->identity());
}

TEST_CASE("flows are homomorphisms of the real line") {
  for (const auto &name : {"affine", "gl:2", "translation:2", "multiplicative"}) {
    CAPTURE(name);
    const CatalogEntry e = get_group(name);
    Vec alpha(e.chart->dim(), 0.25);
    for (Flavor f : {Flavor::Left, Flavor::Right}) {
      const FlowResult r = one_param_subgroup(*e.chart, alpha, 1.0, 999, f, DiffConfig{});
      CHECK(flow_homomorphism_check(r, *e.chart).all_pass());
    }
  }
}

TEST_CASE("a flow that leaves the trust region throws") {
  const CatalogEntry e = get_group("affine");
  CHECK_THROWS_AS(one_param_subgroup(*e.chart, Vec{2.0, 0.0}, 1.0, 100, Flavor::Right, DiffConfig{}),
                  LeftChart);
}

TEST_CASE("homomorphism grid must divide the step count") {
  const CatalogEntry e = get_group("affine");
  const FlowResult r = one_param_subgroup(*e.chart, Vec{0.1, 0.1}, 1.0, 100, Flavor::Right, DiffConfig{});
  CHECK_THROWS_AS(flow_homomorphism_check(r, *e.chart, 10), InvalidArgument);
}

TEST_CASE("canonical coordinate of the multiplicative group is ln") {
  const CatalogEntry e = get_group("multiplicative");
  for (double a : {0.5, 0.9, 1.0, 1.7, 2.0})
    CHECK(std::fabs(canonical_coordinate(*e.chart, a, DiffConfig{}) - std::log(a)) < 1e-7);
  CHECK(additivity_check(*e.chart, DiffConfig{}, std::pair{0.5, 2.0}).all_pass());
}

TEST_CASE("canonical coordinate of the translation line is the identity") {
  const CatalogEntry e = get_group("translation:1");
  CHECK(canonical_coordinate(*e.chart, 0.37, DiffConfig{}) == doctest::Approx(0.37).epsilon(1e-9));
  CHECK(additivity_check(*e.chart, DiffConfig{}).all_pass());
}

TEST_CASE("canonical coordinate needs a one-dimensional chart") {
  CHECK_THROWS_AS(canonical_coordinate(*get_group("affine").chart, 1.0, DiffConfig{}),
                  InvalidArgument);
}
