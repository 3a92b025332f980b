#pragma once

// Infinitesimal generators of the group, left/right structure constants,
// Maurer equations and invariant vector fields.

#include "liekit/group.hpp"

#include <vector>

namespace liekit {

/// I[K][L][M] = d2 phi^K / da^L db^M at (e, e) = d psi_l^K_L / da^M at e.
struct GroupGenerators {
  Tensor3 I;
  /// d psi_l^K_L / da^M at e, differentiated from psi_l directly.
  Tensor3 from_left;
  /// d psi_r^K_L / da^M at e, differentiated from psi_r directly.
  Tensor3 from_right;

  /// max |from_left[K][L][M] - from_right[K][M][L]|.
  double swap_residual() const;
};

GroupGenerators group_generators(const GroupChart &chart, const DiffConfig &cfg);

/// C[U][T][V] = C^U_{TV}.
struct StructureConstants {
  Tensor3 C;
  Flavor flavor = Flavor::Left;

  std::size_t dim() const { return C.dim1(); }
  /// max |C^U_{TV} + C^U_{VT}|.
  double antisymmetry_residual() const;
  /// Max entry of the cyclic Jacobi sum.
  double jacobi_residual() const;
};

/// Left: C^U_{TV} = I^U_{VT} - I^U_{TV}. Right: the negation.
StructureConstants structure_constants(const GroupGenerators &gens, Flavor flavor);

/// Evaluates the defining contraction of psi and d(lambda)/da directly at `a`.
/// The result is constant in `a` for a valid chart.
StructureConstants structure_constants_at_point(const GroupChart &chart,
                                                std::span<const double> a, Flavor flavor,
                                                const DiffConfig &cfg);

/// d psi_flavor / da^R at `a`, one matrix per R, from the mixed stencil of phi.
std::vector<RealMatrix> psi_derivatives(const GroupChart &chart, std::span<const double> a,
                                        Flavor flavor, const DiffConfig &cfg);

/// d lambda / da^R = -lambda (d psi / da^R) lambda.
std::vector<RealMatrix> lambda_derivatives(const RealMatrix &lambda,
                                           const std::vector<RealMatrix> &dpsi);

/// Maurer equation residual at sampled points; record id "maurer_<flavor>".
CheckReport maurer_residual(const GroupChart &chart, Flavor flavor, const DiffConfig &cfg,
                            double tol = 1e-3);

/// Commutators of the invariant fields X_V = psi column V against
/// C^U_{TV} X_U, and linear independence of the frame. Records
/// "commutators_<flavor>" and "frame_rank_<flavor>" (residual n - min rank).
CheckReport invariant_field_commutators(const GroupChart &chart, Flavor flavor,
                                        const DiffConfig &cfg, double tol = 1e-3);

/// [alpha, beta]^T = C^T_{RS} alpha^R beta^S.
Vec bracket(const StructureConstants &c, std::span<const double> alpha,
            std::span<const double> beta);

} // namespace liekit
