#pragma once

// One-parameter subgroups and the additive canonical coordinate of a
// one-dimensional group.

#include "liekit/group.hpp"

#include <optional>
#include <utility>

namespace liekit {

struct FlowResult {
  Vec t_grid;
  std::vector<Vec> path; // path[i] = c(t_grid[i]); path[0] = e
  Vec alpha;
  Flavor flavor = Flavor::Right;

  const Vec &end() const { return path.back(); }
};

/// Fixed-step RK4 solution of dc/dt = psi_flavor(c) alpha, c(0) = e.
/// Throws LeftChart when the flow exits the trust region before t_end.
FlowResult one_param_subgroup(const GroupChart &chart, std::span<const double> alpha,
                              double t_end, std::size_t steps, Flavor flavor,
                              const DiffConfig &cfg);

/// Max |c(t + s) - c(t) c(s)| over grid pairs with t + s on the grid.
/// Uses `grid_points` equally spaced nodes of the flow (including 0).
CheckReport flow_homomorphism_check(const FlowResult &flow, const GroupChart &chart,
                                    std::size_t grid_points = 10, double tol = 1e-5);

/// A(a) = integral from e to a of d tau / psi_r(tau) for a 1-dimensional
/// chart, by adaptive Simpson to absolute tolerance 1e-9.
/// Throws ZeroPsi when |psi_r| < 1e-12 on the path.
double canonical_coordinate(const GroupChart &chart, double a, const DiffConfig &cfg);

/// |A(ab) - A(a) - A(b)| at sampled pairs. Pairs are drawn in `range` when
/// given, otherwise in the sampling ball around e. Record "canonical_additivity".
CheckReport additivity_check(const GroupChart &chart, const DiffConfig &cfg,
                             std::optional<std::pair<double, double>> range = std::nullopt,
                             double tol = 1e-6);

} // namespace liekit
