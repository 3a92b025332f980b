#pragma once

// Linear representations of a group chart: axioms, generators, the
// representation PDE and its integrability condition, conjugation, tensor
// products, direct sums and the transformation of generators under a
// passive left shift.
//
// A left-side representation acts on column vectors, f(ba) = f(b) f(a).
// A right-side representation acts on row vectors, f(ba) = f(a) f(b); the
// conjugate of a left-side representation is right-side and vice versa.

#include "liekit/structure.hpp"

#include <functional>
#include <memory>

namespace liekit {

using MatrixMap = std::function<RealMatrix(std::span<const double>)>;

enum class Side { Left, Right };

std::string_view side_name(Side s);

struct RepChart {
  std::shared_ptr<const GroupChart> group;
  std::size_t m = 0;
  MatrixMap f;
  Side side = Side::Left;
  std::string name;

  /// f(a); throws InvalidArgument if the result is not m x m.
  RealMatrix operator()(std::span<const double> a) const;
};

/// I_M[alpha][beta] = d f^alpha_beta / da^M at e.
struct RepGenerators {
  std::vector<RealMatrix> I;

  std::size_t count() const { return I.size(); }
  std::size_t dim() const { return I.empty() ? 0 : I.front().rows(); }
};

double max_abs_diff(const RepGenerators &a, const RepGenerators &b);
RepGenerators negate(const RepGenerators &g);

/// f(e) = 1 ("rep_identity"), homomorphism in the order given by the side
/// ("rep_homomorphism"), f(a^{-1}) = f(a)^{-1} ("rep_inverse").
CheckReport rep_axioms(const RepChart &rep, const DiffConfig &cfg, double identity_tol = 1e-10,
                       double homomorphism_tol = 1e-8, double inverse_tol = 1e-7);

RepGenerators rep_generators(const RepChart &rep, const DiffConfig &cfg);

/// Residual of df/da^L against I_K f lambda_l^K_L (left side) or
/// f I_K lambda_l^K_L (right side), plus the same contracted with a random
/// test vector. Records "rep_pde_matrix" and "rep_pde_vector".
CheckReport rep_pde_residual(const RepChart &rep, const RepGenerators &gens,
                             const DiffConfig &cfg, double tol = 1e-3);

/// Max entry of [I_K, I_P] - s C^T_{PK} I_T with s = +1 for left-side and
/// s = -1 for right-side generators. Record "rep_integrability".
CheckReport integrability_check(const RepGenerators &gens, const StructureConstants &c_left,
                                Side side = Side::Left, double tol = 1e-6);

/// a -> f(a)^{-1} with the opposite side.
RepChart conjugate_rep(const RepChart &rep);

/// <u f2(a), f1(a) v> = <u, v> at sampled (u, v, a). Record "conjugate_pairing".
CheckReport conjugate_pairing_check(const RepChart &rep, const DiffConfig &cfg,
                                    double tol = 1e-7);

/// Max entry of gens(conjugate) + gens(rep). Record "conjugate_generators".
CheckReport conjugate_generators_check(const RepChart &rep, const DiffConfig &cfg,
                                       double tol = 1e-5);

/// f(a) = f1(a) (x) f2(a). Throws InvalidArgument if the groups or sides differ.
RepChart tensor_product(const RepChart &r1, const RepChart &r2);
/// I_M = I1_M (x) 1 + 1 (x) I2_M.
RepGenerators tensor_generators(const RepGenerators &g1, const RepGenerators &g2);

/// Block-diagonal f. Throws InvalidArgument if the groups or sides differ.
RepChart direct_sum(const RepChart &r1, const RepChart &r2);
RepGenerators direct_sum_generators(const RepGenerators &g1, const RepGenerators &g2);

/// Generators seen after the passive left shift a -> g a:
/// f(g)^{-1} (sum_J I_J (lambda_l(g) psi_r(g))^J_K) f(g) for a left-side rep,
/// with f and f^{-1} exchanged for a right-side rep.
RepGenerators generator_transform(const RepChart &rep, const RepGenerators &gens,
                                  std::span<const double> g, const DiffConfig &cfg);

/// generator_transform at sampled g equals the input. Record "generator_transform".
CheckReport generator_transform_check(const RepChart &rep, const RepGenerators &gens,
                                      const DiffConfig &cfg, double tol = 1e-4);

/// I_K f lambda_l^K_L - f I_J lambda_r^J_L (left side; factors of f swap
/// for a right side). Record "rep_mixed_identity".
CheckReport mixed_identity_check(const RepChart &rep, const RepGenerators &gens,
                                 const DiffConfig &cfg, double tol = 1e-3);

} // namespace liekit
