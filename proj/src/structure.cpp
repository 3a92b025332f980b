#include "liekit/structure.hpp"

#include "liekit/errors.hpp"
#include "liekit/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace liekit {

namespace {

// Jacobian of a -> psi_flavor(a) flattened row-major, reshaped to
// [K][L][M] = d psi^K_L / da^M.
Tensor3 differentiate_psi(const GroupChart &chart, Flavor flavor, const DiffConfig &cfg) {
  const std::size_t n = chart.dim();
  const DiffConfig c2 = cfg.second_order();
  const RealMatrix j = jacobian(
      [&](std::span<const double> a) {
        RealMatrix p = psi(chart, a, flavor, c2);
        return Vec(p.data().begin(), p.data().end());
      },
      chart.identity(), c2);
  Tensor3 t(n, n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m) t(k, l, m) = j(k * n + l, m);
  return t;
}

} // namespace

double GroupGenerators::swap_residual() const {
  const std::size_t n = I.dim1();
  double r = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m)
        r = std::max(r, std::fabs(from_left(k, l, m) - from_right(k, m, l)));
  return r;
}

GroupGenerators group_generators(const GroupChart &chart, const DiffConfig &cfg) {
  GroupGenerators g;
  g.I = mixed_second(chart.compose_map(), chart.identity(), chart.identity(), cfg);
  g.from_left = differentiate_psi(chart, Flavor::Left, cfg);
  g.from_right = differentiate_psi(chart, Flavor::Right, cfg);
  return g;
}

double StructureConstants::antisymmetry_residual() const {
  const std::size_t n = dim();
  double r = 0.0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t v = 0; v < n; ++v) r = std::max(r, std::fabs(C(u, t, v) + C(u, v, t)));
  return r;
}

double StructureConstants::jacobi_residual() const {
  const std::size_t n = dim();
  double r = 0.0;
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t x = 0; x < n; ++x) {
          double s = 0.0;
          for (std::size_t w = 0; w < n; ++w)
            s += C(w, t, v) * C(x, w, u) + C(w, v, u) * C(x, w, t) + C(w, u, t) * C(x, w, v);
          r = std::max(r, std::fabs(s));
        }
  return r;
}

StructureConstants structure_constants(const GroupGenerators &gens, Flavor flavor) {
  const std::size_t n = gens.I.dim1();
  const double sign = flavor == Flavor::Left ? 1.0 : -1.0;
  Tensor3 c(n, n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t v = 0; v < n; ++v)
        c(u, t, v) = sign * (gens.I(u, v, t) - gens.I(u, t, v));
  return {std::move(c), flavor};
}

std::vector<RealMatrix> psi_derivatives(const GroupChart &chart, std::span<const double> a,
                                        Flavor flavor, const DiffConfig &cfg) {
  const std::size_t n = chart.dim();
  std::vector<RealMatrix> d(n, RealMatrix(n, n));
  if (flavor == Flavor::Right) {
    // psi_r^K_L(a) = d phi^K(a, b)/db^L at b = e.
    const Tensor3 t = mixed_second(chart.compose_map(), a, chart.identity(), cfg);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t l = 0; l < n; ++l) d[r](k, l) = t(k, r, l);
  } else {
    // psi_l^K_L(a) = d phi^K(x, a)/dx^L at x = e.
    const Tensor3 t = mixed_second(chart.compose_map(), chart.identity(), a, cfg);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t r = 0; r < n; ++r) d[r](k, l) = t(k, l, r);
  }
  return d;
}

std::vector<RealMatrix> lambda_derivatives(const RealMatrix &lambda,
                                           const std::vector<RealMatrix> &dpsi) {
  std::vector<RealMatrix> out;
  out.reserve(dpsi.size());
  for (const auto &dp : dpsi) out.push_back(-(lambda * dp * lambda));
  return out;
}

StructureConstants structure_constants_at_point(const GroupChart &chart,
                                                std::span<const double> a, Flavor flavor,
                                                const DiffConfig &cfg) {
  const std::size_t n = chart.dim();
  const RealMatrix p = psi(chart, a, flavor, cfg);
  const RealMatrix lam = invert(p, cfg.rank_tol);
  const auto dlam = lambda_derivatives(lam, psi_derivatives(chart, a, flavor, cfg));
  // curl[U](R, P) = d lambda^U_R / da^P - d lambda^U_P / da^R
  Tensor3 c(n, n, n);
  for (std::size_t u = 0; u < n; ++u) {
    RealMatrix curl(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = 0; q < n; ++q) curl(r, q) = dlam[q](u, r) - dlam[r](u, q);
    // C^U_{VT} = psi^R_V psi^P_T curl[U](R, P)  ->  psi^T curl psi
    const RealMatrix m = p.transpose() * curl * p;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t t = 0; t < n; ++t) c(u, v, t) = m(v, t);
  }
  return {std::move(c), flavor};
}

CheckReport maurer_residual(const GroupChart &chart, Flavor flavor, const DiffConfig &cfg,
                            double tol) {
  const std::size_t n = chart.dim();
  const StructureConstants sc = structure_constants(group_generators(chart, cfg), flavor);
  Sampler s(cfg.rng_seed, "maurer_" + std::string(flavor_name(flavor)));
  ResidualTracker tr;
  for (std::size_t k = 0; k < cfg.sample_count; ++k) {
    const Vec a = sample_point(chart, s, cfg);
    const RealMatrix lam = invert(psi(chart, a, flavor, cfg), cfg.rank_tol);
    const auto dlam = lambda_derivatives(lam, psi_derivatives(chart, a, flavor, cfg));
    for (std::size_t u = 0; u < n; ++u) {
      // lhs(P, R) = C^U_{TV} lambda^T_P lambda^V_R = (lam^T C^U lam)(P, R)
      RealMatrix cu(n, n);
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t v = 0; v < n; ++v) cu(t, v) = sc.C(u, t, v);
      const RealMatrix lhs = lam.transpose() * cu * lam;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < n; ++r)
          tr.observe(lhs(p, r) - (dlam[r](u, p) - dlam[p](u, r)));
    }
    tr.count_sample();
  }
  CheckReport rep;
  rep.add("maurer_" + std::string(flavor_name(flavor)), tr.max(), tol, tr.samples());
  return rep;
}

CheckReport invariant_field_commutators(const GroupChart &chart, Flavor flavor,
                                        const DiffConfig &cfg, double tol) {
  const std::size_t n = chart.dim();
  const StructureConstants sc = structure_constants(group_generators(chart, cfg), flavor);
  const DiffConfig c2 = cfg.second_order();
  auto field = [&](std::size_t v) -> VecMap {
    return [&chart, flavor, c2, v](std::span<const double> a) {
      return psi(chart, a, flavor, c2).column(v);
    };
  };
  std::vector<VecMap> fields;
  for (std::size_t v = 0; v < n; ++v) fields.push_back(field(v));

  Sampler s(cfg.rng_seed, "commutators_" + std::string(flavor_name(flavor)));
  ResidualTracker comm;
  std::size_t min_rank = n;
  for (std::size_t k = 0; k < cfg.sample_count; ++k) {
    const Vec a = sample_point(chart, s, cfg);
    const RealMatrix frame = psi(chart, a, flavor, cfg);
    min_rank = std::min(min_rank, numeric_rank(frame, cfg.rank_tol));
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t v = t + 1; v < n; ++v) {
        const Vec lhs = vf_commutator(fields[t], fields[v], a, c2);
        Vec rhs(n, 0.0);
        for (std::size_t u = 0; u < n; ++u) kernels::axpy(sc.C(u, t, v), frame.column(u), rhs);
        comm.observe(max_abs_diff(lhs, rhs));
      }
    comm.count_sample();
  }
  const std::string f(flavor_name(flavor));
  CheckReport rep;
  rep.add("commutators_" + f, comm.max(), tol, comm.samples());
  rep.add("frame_rank_" + f, static_cast<double>(n - min_rank), 0.0, comm.samples());
  return rep;
}

Vec bracket(const StructureConstants &c, std::span<const double> alpha,
            std::span<const double> beta) {
  const std::size_t n = c.dim();
  if (alpha.size() != n || beta.size() != n) throw InvalidArgument("bracket: dimension mismatch");
  Vec out(n, 0.0);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = 0; q < n; ++q) out[t] += c.C(t, r, q) * alpha[r] * beta[q];
  return out;
}

} // namespace liekit
