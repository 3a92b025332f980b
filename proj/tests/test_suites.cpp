#include "liekit/suites.hpp"

#include "liekit/errors.hpp"

#include <doctest.h>

using namespace liekit;

namespace {

SuiteOptions opts(std::string group, std::string suite, std::uint64_t seed = 1) {
  SuiteOptions o;
  o.group = std::move(group);
  o.suite = std::move(suite);
  o.cfg.rng_seed = seed;
  o.cfg.sample_count = 6;
  return o;
}

} // namespace

TEST_CASE("unknown suite, group and rep names") {
  CHECK_THROWS_AS(run_suite(opts("gl:2", "everything")), UnknownEntry);
  CHECK_THROWS_AS(run_suite(opts("sl:2", "shift")), UnknownEntry);
  SuiteOptions o = opts("gl:2", "rep");
  o.rep = "adjoint";
  CHECK_THROWS_AS(run_suite(o), UnknownEntry);
}

TEST_CASE("translation:2 passes everything at 1e-9") {
  const CheckReport r = run_suite(opts("translation:2", "all"));
  CHECK(r.all_pass());
  for (const auto &c : r.checks) {
    CAPTURE(c.id);
    CHECK(c.max_residual <= 1e-9);
  }
}

TEST_CASE("gl:2 structure suite carries maurer_left") {
  const CheckReport r = run_suite(opts("gl:2", "structure"));
  CHECK(r.all_pass());
  CHECK(r.at("maurer_left").max_residual <= 1e-3);
  CHECK(r.suite == "structure");
  CHECK(r.group == "gl:2");
  CHECK(r.seed == 1);
}

TEST_CASE("gl:2 conjugate rep suite") {
  SuiteOptions o = opts("gl:2", "rep");
  o.rep = "conjugate";
  const CheckReport r = run_suite(o);
  CHECK(r.all_pass());
  CHECK(r.at("conjugate_generators").max_residual <= 1e-5);
}

TEST_CASE("without a rep every catalog rep runs under a prefix") {
  const CheckReport r = run_suite(opts("affine", "rep"));
  CHECK(r.all_pass());
  CHECK(r.find("standard/rep_homomorphism"));
  CHECK(r.find("direct-sum/generator_transform"));
}

TEST_CASE("tolerance scaling multiplies every tolerance") {
  SuiteOptions a = opts("affine", "shift"), b = a;
  b.tol_scale = 1e-20;
  const CheckReport ra = run_suite(a), rb = run_suite(b);
  CHECK(ra.all_pass());
  CHECK_FALSE(rb.all_pass());
  CHECK(rb.checks[0].tolerance == doctest::Approx(ra.checks[0].tolerance * 1e-20));
  b.tol_scale = 0.0;
  CHECK_THROWS_AS(run_suite(b), InvalidArgument);
}

TEST_CASE("reports are reproducible for a fixed seed") {
  const std::string a = to_json(run_suite(opts("affine", "all", 3)));
  const std::string b = to_json(run_suite(opts("affine", "all", 3)));
  CHECK(a == b);
  CHECK(a != to_json(run_suite(opts("affine", "all", 4))));
}

TEST_CASE("every catalog group passes the flows and pde suites") {
  for (const auto &g : catalog_group_names()) {
    CAPTURE(g);
    CHECK(run_suite(opts(g, "flows")).all_pass());
    CHECK(run_suite(opts(g, "pde")).all_pass());
  }
}
