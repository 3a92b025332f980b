#include "liekit/catalog.hpp"

#include "liekit/errors.hpp"
#include "liekit/suites.hpp"

#include <doctest.h>

using namespace liekit;

TEST_CASE("names outside the vocabulary are rejected") {
  for (const char *bad : {"gl:4", "gl:0", "gl:", "translation:0", "translation:x", "so:3", ""})
    CHECK_THROWS_AS(get_group(bad), UnknownEntry);
  CHECK_THROWS_AS(get_rep("gl:2", "spin"), UnknownEntry);
  CHECK_THROWS_AS(get_rep("gl:5", "standard"), UnknownEntry);
}

TEST_CASE("translation:2 entry") {
  const CatalogEntry e = get_group("translation:2");
  CHECK(e.chart->dim() == 2);
  CHECK(e.chart->identity() == Vec{0.0, 0.0});
  CHECK(e.chart->compose(Vec{1, 2}, Vec{3, 4}) == Vec{4, 6});
  CHECK((*e.oracles.psi_l)(Vec{0.1, 0.2}) == RealMatrix::identity(2));
  CHECK(e.oracles.C_left->max_abs() == 0.0);
}

TEST_CASE("gl:2 entry composes matrices row-major") {
  const CatalogEntry e = get_group("gl:2");
  CHECK(e.chart->identity() == Vec{1, 0, 0, 1});
  CHECK(e.chart->compose(Vec{1, 2, 3, 4}, Vec{0, 1, 1, 0}) == Vec{2, 1, 4, 3});
  // psi_r(diag(2,1)) = diag(2,2,1,1)
  const RealMatrix p = (*e.oracles.psi_r)(Vec{2, 0, 0, 1});
  CHECK(p == RealMatrix::diagonal(Vec{2, 2, 1, 1}));
}

TEST_CASE("affine entry oracle") {
  const CatalogEntry e = get_group("affine");
  CHECK((*e.oracles.C_left)(1, 0, 1) == -1.0);
  CHECK(e.chart->compose(Vec{2, 1}, Vec{3, 4}) == Vec{6, 9});
}

TEST_CASE("trivial rep everywhere, conjugate generators negated") {
  for (const auto &g : catalog_group_names()) {
    CAPTURE(g);
    const CatalogRep t = get_catalog_rep(g, "trivial");
    CHECK(t.rep.m == 1);
    for (const auto &m : t.generators->I) CHECK(m.max_abs() == 0.0);
    const CatalogRep s = get_catalog_rep(g, "standard"), c = get_catalog_rep(g, "conjugate");
    CHECK(max_abs_diff(*c.generators, negate(*s.generators)) == 0.0);
  }
}

TEST_CASE("numeric operators agree with the closed forms") {
  DiffConfig cfg;
  for (const auto &g : catalog_group_names()) {
    CAPTURE(g);
    const CheckReport r = operator_oracle_check(get_group(g), cfg);
    CHECK(r.checks.size() == 5);
    for (const auto &c : r.checks) {
      CAPTURE(c.id);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("gl:3 generator oracle") {
  const CatalogEntry e = get_group("gl:3");
  CHECK(max_abs_diff(group_generators(*e.chart, DiffConfig{}).I, *e.oracles.I) < 1e-4);
}
