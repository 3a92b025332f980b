#pragma once

// Small first-order PDE systems d(theta)/dx = psi(theta, x): the complete
// integrability condition, a path-integrating local solver with its
// second-order Taylor data, and essential-parameter rank sequences of
// function families.

#include "liekit/group.hpp"

#include <functional>
#include <string>

namespace liekit {

struct PDESystem {
  std::string name;
  std::size_t m = 0; // unknowns theta^alpha
  std::size_t n = 0; // independents x^i
  /// (theta, x) -> m x n matrix psi^alpha_i.
  std::function<RealMatrix(std::span<const double>, std::span<const double>)> psi;
  Vec theta_center;
  Vec x_center;
  double box_radius = 1.0;

  RealMatrix operator()(std::span<const double> theta, std::span<const double> x) const;
};

/// Max over sampled (theta, x) in the box of the antisymmetrized total
/// derivative of psi. Record "pde_integrability".
CheckReport integrability_residual(const PDESystem &sys, const DiffConfig &cfg,
                                   double tol = 1e-8);

struct SolveOptions {
  std::size_t steps_per_segment = 200;
  /// Precheck threshold; NotIntegrable above it.
  double integrability_tol = 1e-6;
};

/// theta(x1) for theta(x0) = c, RK4 along the segment x0 -> x1.
Vec taylor_solve(const PDESystem &sys, std::span<const double> c, std::span<const double> x0,
                 std::span<const double> x1, const DiffConfig &cfg,
                 const SolveOptions &opt = {});

/// Same along a polyline path[0] -> path[1] -> ...; theta(path[0]) = c.
Vec taylor_solve_path(const PDESystem &sys, std::span<const double> c,
                      const std::vector<Vec> &path, const DiffConfig &cfg,
                      const SolveOptions &opt = {});

/// theta, d theta/dx and d2 theta/dx dx at x0 from the system itself.
struct TaylorCoefficients {
  Vec value;
  RealMatrix first; // [alpha][i]
  Tensor3 second;   // [alpha][i][j]

  /// Second-order series at x.
  Vec evaluate(std::span<const double> x0, std::span<const double> x) const;
};

TaylorCoefficients taylor_coefficients(const PDESystem &sys, std::span<const double> c,
                                       std::span<const double> x0, const DiffConfig &cfg);

/// psi_i = theta for i = 1..n (m = 1); integrable, solution C e^{x^1 + ... + x^n}.
PDESystem exponential_system(std::size_t n);
/// m = 1, n = 2, psi_1 = x^2, psi_2 = 0; integrability residual 1.
PDESystem skew_system();
/// psi = 0.
PDESystem zero_system(std::size_t m, std::size_t n);

struct FunctionFamily {
  std::string name;
  std::size_t nf = 0; // functions f^i
  std::size_t nx = 0; // variables
  std::size_t r = 0;  // parameters
  /// (x, a) -> nf-vector.
  std::function<Vec(std::span<const double>, std::span<const double>)> f;
  std::size_t s_max = 3;
  Vec x_lo, x_hi;
  Vec a0;
};

/// mu_0, mu_1, ... from parameter Jacobians of f and its x-derivatives pooled
/// over sampled x. Stops when mu_s = r, mu_s = mu_{s-1}, mu_0 = 0 or s = s_max.
std::vector<std::size_t> essential_param_ranks(const FunctionFamily &fam, const DiffConfig &cfg);
std::size_t essential_count(const FunctionFamily &fam, const DiffConfig &cfg);

/// f^K(b; a) = phi^K(a, b) with b sampled around e and a0 = e.
FunctionFamily phi_family(const GroupChart &chart, double radius = 0.2);

/// x + a1 + a2, a1 x + a2, (a1 + a2) x, 0 * a.
std::vector<FunctionFamily> bundled_families();

} // namespace liekit
