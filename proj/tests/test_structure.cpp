#include "liekit/structure.hpp"

#include "liekit/catalog.hpp"

#include <doctest.h>

#include <cmath>

using namespace liekit;

TEST_CASE("affine generators and left structure constants") {
  const CatalogEntry e = get_group("affine");
  const GroupGenerators g = group_generators(*e.chart, DiffConfig{});
  CHECK(g.I(0, 0, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(g.I(1, 0, 1) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::fabs(g.I(1, 1, 0)) < 1e-6);
  CHECK(g.swap_residual() < 1e-4);

  const StructureConstants cl = structure_constants(g, Flavor::Left);
  CHECK(cl.C(1, 0, 1) == doctest::Approx(-1.0).epsilon(1e-4));
  CHECK(cl.C(1, 1, 0) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(std::fabs(cl.C(0, 0, 1)) < 1e-4);
}

TEST_CASE("translation group is abelian") {
  const CatalogEntry e = get_group("translation:3");
  const GroupGenerators g = group_generators(*e.chart, DiffConfig{});
  CHECK(g.I.max_abs() < 1e-9);
  CHECK(structure_constants(g, Flavor::Left).C.max_abs() < 1e-9);
}

TEST_CASE("gl:2 constants match the oracle; right = -left; Jacobi") {
  const CatalogEntry e = get_group("gl:2");
  const GroupGenerators g = group_generators(*e.chart, DiffConfig{});
  CHECK(max_abs_diff(g.I, *e.oracles.I) < 1e-4);
  const StructureConstants cl = structure_constants(g, Flavor::Left);
  const StructureConstants cr = structure_constants(g, Flavor::Right);
  CHECK(max_abs_diff(cl.C, *e.oracles.C_left) < 1e-4);
  CHECK(max_abs_diff(cr.C, -cl.C) < 1e-6);
  CHECK(cl.antisymmetry_residual() < 1e-6);
  CHECK(cl.jacobi_residual() < 1e-4);
  CHECK(cr.jacobi_residual() < 1e-4);
}

TEST_CASE("gl:2 left constants reproduce the matrix commutator of units") {
  // [E_K, E_P] = C^T_{PK} E_T under the row-major flattening.
  const CatalogEntry e = get_group("gl:2");
  const Tensor3 &c = *e.oracles.C_left;
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t p = 0; p < 4; ++p) {
      const RealMatrix ek = matrix_unit(2, k / 2, k % 2), ep = matrix_unit(2, p / 2, p % 2);
      RealMatrix rhs(2, 2);
      for (std::size_t t = 0; t < 4; ++t) rhs += matrix_unit(2, t / 2, t % 2) * c(t, p, k);
      CHECK(max_abs_diff(ek * ep - ep * ek, rhs) == 0.0);
    }
}

TEST_CASE("constants evaluated away from the identity are constant") {
  const CatalogEntry e = get_group("affine");
  const DiffConfig cfg;
  const StructureConstants cl = structure_constants(group_generators(*e.chart, cfg), Flavor::Left);
  const StructureConstants cr = structure_constants(group_generators(*e.chart, cfg), Flavor::Right);
  for (const Vec &a : {Vec{1.5, 0.3}, Vec{0.7, -0.6}, Vec{1.0, 0.0}}) {
    CHECK(max_abs_diff(structure_constants_at_point(*e.chart, a, Flavor::Left, cfg).C, cl.C) < 1e-4);
    CHECK(max_abs_diff(structure_constants_at_point(*e.chart, a, Flavor::Right, cfg).C, cr.C) < 1e-4);
  }
}

TEST_CASE("Maurer residual and invariant-field commutators on every catalog group") {
  DiffConfig cfg;
  cfg.sample_count = 6;
  for (const auto &name : catalog_group_names()) {
    CAPTURE(name);
    const CatalogEntry e = get_group(name);
    for (Flavor f : {Flavor::Left, Flavor::Right}) {
      CHECK(maurer_residual(*e.chart, f, cfg).all_pass());
      const CheckReport c = invariant_field_commutators(*e.chart, f, cfg);
      CHECK(c.all_pass());
      CHECK(c.checks.at(1).max_residual == 0.0);
    }
  }
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  const StructureConstants c{*get_group("gl:2").oracles.C_left, Flavor::Left};
  const Vec x{0.3, -1.0, 2.0, 0.5}, y{1.0, 0.2, -0.7, 0.1};
  const Vec xy = bracket(c, x, y), yx = bracket(c, y, x);
  for (std::size_t i = 0; i < 4; ++i) CHECK(xy[i] == doctest::Approx(-yx[i]));
  CHECK(bracket(c, x, x) == Vec(4, 0.0));
}

TEST_CASE("a non-associative chart fails the Maurer check") {
  // Not associative: psi_r = [[1, 0], [a2^2, 1]] has a non-closed lambda
  // while every constant computed at e vanishes.
  const GroupChart g(
      "bent", 2,
      [](std::span<const double> a, std::span<const double> b) {
        return Vec{a[0] + b[0], a[1] + b[1] + a[1] * a[1] * b[0]};
      },
      Vec{0.0, 0.0});
  DiffConfig cfg;
  cfg.sample_count = 5;
  cfg.sample_radius = 0.5;
  CHECK_FALSE(maurer_residual(g, Flavor::Right, cfg).all_pass());
}
