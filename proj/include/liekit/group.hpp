#pragma once

// Lie group presented as a coordinate chart with a composition law, the
// shift derivatives A_l/A_r, the basic operators psi/lambda and the suite of
// differential identities they satisfy.

#include "liekit/numdiff.hpp"
#include "liekit/report.hpp"

#include <optional>
#include <string>

namespace liekit {

/// Which shift an operator describes.
enum class Flavor { Left, Right };

std::string_view flavor_name(Flavor f);

/// Local coordinates of an n-dimensional Lie group. Immutable; `compose`
/// and `inverse_hint` must be pure and re-entrant.
class GroupChart {
public:
  GroupChart(std::string name, std::size_t n, BiMap compose, Vec identity,
             std::optional<VecMap> inverse_hint = std::nullopt, double chart_radius = 1.0);

  const std::string &name() const { return name_; }
  std::size_t dim() const { return n_; }
  const Vec &identity() const { return identity_; }
  double chart_radius() const { return radius_; }
  const std::optional<VecMap> &inverse_hint() const { return inverse_hint_; }
  const BiMap &compose_map() const { return compose_; }

  /// phi(a, b); throws NonFiniteEvaluation on NaN/Inf output.
  Vec compose(std::span<const double> a, std::span<const double> b) const;
  /// ||a - e||_inf <= chart_radius.
  bool within(std::span<const double> a) const;

private:
  std::string name_;
  std::size_t n_;
  BiMap compose_;
  Vec identity_;
  std::optional<VecMap> inverse_hint_;
  double radius_;
};

/// Element of T_aG.
struct TangentVector {
  Vec components;
  Vec base;
};

/// a^{-1}. Uses the chart's closed form when present, otherwise damped
/// Newton on compose(a, x) = e with Jacobian A_r(a, x).
Vec inverse(const GroupChart &chart, std::span<const double> a,
            const DiffConfig &cfg = DiffConfig{});

struct ShiftJacobians {
  RealMatrix left;  // d phi(a, b) / da
  RealMatrix right; // d phi(a, b) / db
};

ShiftJacobians shift_jacobians(const GroupChart &chart, std::span<const double> a,
                               std::span<const double> b, const DiffConfig &cfg);
RealMatrix shift_left(const GroupChart &chart, std::span<const double> a,
                      std::span<const double> b, const DiffConfig &cfg);
RealMatrix shift_right(const GroupChart &chart, std::span<const double> a,
                       std::span<const double> b, const DiffConfig &cfg);

struct BasicOperators {
  RealMatrix psi_l, psi_r, lambda_l, lambda_r;

  const RealMatrix &psi(Flavor f) const { return f == Flavor::Left ? psi_l : psi_r; }
  const RealMatrix &lambda(Flavor f) const { return f == Flavor::Left ? lambda_l : lambda_r; }
};

/// psi_r = A_r(a, e), psi_l = A_l(e, a), lambda = psi^{-1}.
/// SingularMatrix means `a` left the chart's invertibility region.
BasicOperators basic_operators(const GroupChart &chart, std::span<const double> a,
                               const DiffConfig &cfg);
RealMatrix psi(const GroupChart &chart, std::span<const double> a, Flavor f,
               const DiffConfig &cfg);

/// Transports alpha in T_eG to T_aG with psi_flavor(a).
TangentVector transport(const GroupChart &chart, std::span<const double> a,
                        std::span<const double> alpha, Flavor f, const DiffConfig &cfg);

/// Draws a point uniformly in the sampling ball around e, rejecting points
/// outside the trust region or whose inverse leaves it. Throws NoConvergence
/// after 1000 rejected draws.
Vec sample_point(const GroupChart &chart, Sampler &sampler, const DiffConfig &cfg);

/// Unit laws and associativity of the composition law at sampled points.
CheckReport verify_chart(const GroupChart &chart, const DiffConfig &cfg, double tol = 1e-10);

/// Every shift-operator identity: cocycles, inverse operators, lambda closed
/// forms, factorizations, inverse-map / quotient / triple-product /
/// conjugation derivatives and the adjoint identity. One record per identity.
CheckReport verify_shift_identities(const GroupChart &chart, const DiffConfig &cfg,
                                    double tol = 1e-6);

} // namespace liekit
