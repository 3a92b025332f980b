#include "liekit/representations.hpp"

#include "liekit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace liekit {

namespace {

Vec flatten(const RealMatrix &m) { return Vec(m.data().begin(), m.data().end()); }

// sum_J I_J w^J
RealMatrix contract(const RepGenerators &g, std::span<const double> w) {
  RealMatrix out(g.dim(), g.dim());
  for (std::size_t j = 0; j < g.count(); ++j)
    if (w[j] != 0.0) out += g.I[j] * w[j];
  return out;
}

void require_compatible(const RepChart &a, const RepChart &b, std::string_view what) {
  if (a.group != b.group)
    throw InvalidArgument(std::string(what) + ": representations of different groups");
  if (a.side != b.side)
    throw InvalidArgument(std::string(what) + ": left-side and right-side representations");
}

void require_same_count(const RepGenerators &a, const RepGenerators &b, std::string_view what) {
  if (a.count() != b.count())
    throw InvalidArgument(std::string(what) + ": generator counts differ");
}

// d f / da^L at a, one matrix per L.
std::vector<RealMatrix> rep_derivatives(const RepChart &rep, std::span<const double> a,
                                        const DiffConfig &cfg) {
  const std::size_t m = rep.m, n = rep.group->dim();
  const RealMatrix j =
      jacobian([&](std::span<const double> x) { return flatten(rep(x)); }, a, cfg);
  std::vector<RealMatrix> out(n, RealMatrix(m, m));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t r = 0; r < m * m; ++r) out[l].data()[r] = j(r, l);
  return out;
}

} // namespace

std::string_view side_name(Side s) { return s == Side::Left ? "left" : "right"; }

RealMatrix RepChart::operator()(std::span<const double> a) const {
  RealMatrix r = f(a);
  if (r.rows() != m || r.cols() != m)
    throw InvalidArgument("representation '" + name + "' returned a matrix of the wrong size");
  require_finite(r.data(), name);
  return r;
}

double max_abs_diff(const RepGenerators &a, const RepGenerators &b) {
  require_same_count(a, b, "max_abs_diff");
  double r = 0.0;
  for (std::size_t k = 0; k < a.count(); ++k) r = std::max(r, max_abs_diff(a.I[k], b.I[k]));
  return r;
}

RepGenerators negate(const RepGenerators &g) {
  RepGenerators out;
  for (const auto &i : g.I) out.I.push_back(-i);
  return out;
}

CheckReport rep_axioms(const RepChart &rep, const DiffConfig &cfg, double identity_tol,
                       double homomorphism_tol, double inverse_tol) {
  const GroupChart &g = *rep.group;
  const RealMatrix one = RealMatrix::identity(rep.m);
  CheckReport out;
  out.add("rep_identity", max_abs_diff(rep(g.identity()), one), identity_tol, 1);

  Sampler s(cfg.rng_seed, "rep_axioms");
  ResidualTracker hom, inv;
  for (std::size_t i = 0; i < cfg.sample_count; ++i) {
    const Vec a = sample_point(g, s, cfg), b = sample_point(g, s, cfg);
    const RealMatrix fa = rep(a), fb = rep(b);
    const RealMatrix prod = rep.side == Side::Left ? fb * fa : fa * fb;
    hom.observe(max_abs_diff(rep(g.compose(b, a)), prod));
    inv.observe(max_abs_diff(rep(inverse(g, a, cfg)) * fa, one));
    hom.count_sample();
    inv.count_sample();
  }
  out.add("rep_homomorphism", hom.max(), homomorphism_tol, hom.samples());
  out.add("rep_inverse", inv.max(), inverse_tol, inv.samples());
  return out;
}

RepGenerators rep_generators(const RepChart &rep, const DiffConfig &cfg) {
  RepGenerators g;
  g.I = rep_derivatives(rep, rep.group->identity(), cfg);
  return g;
}

CheckReport rep_pde_residual(const RepChart &rep, const RepGenerators &gens,
                             const DiffConfig &cfg, double tol) {
  const GroupChart &g = *rep.group;
  const std::size_t n = g.dim();
  if (gens.count() != n || gens.dim() != rep.m)
    throw InvalidArgument("rep_pde_residual: generators do not match the representation");

  Sampler s(cfg.rng_seed, "rep_pde");
  ResidualTracker mat, vec;
  for (std::size_t i = 0; i < cfg.sample_count; ++i) {
    const Vec a = sample_point(g, s, cfg);
    Vec v(rep.m);
    for (auto &x : v) x = s.uniform(-1.0, 1.0);

    const RealMatrix fa = rep(a);
    const RealMatrix lam = basic_operators(g, a, cfg).lambda_l;
    const std::vector<RealMatrix> df = rep_derivatives(rep, a, cfg);
    for (std::size_t l = 0; l < n; ++l) {
      const RealMatrix w = contract(gens, lam.column(l));
      const RealMatrix rhs = rep.side == Side::Left ? w * fa : fa * w;
      mat.observe(max_abs_diff(df[l], rhs));
      vec.observe(max_abs_diff(df[l] * v, rhs * v));
    }
    mat.count_sample();
    vec.count_sample();
  }
  CheckReport out;
  out.add("rep_pde_matrix", mat.max(), tol, mat.samples());
  out.add("rep_pde_vector", vec.max(), tol, vec.samples());
  return out;
}

CheckReport integrability_check(const RepGenerators &gens, const StructureConstants &c_left,
                                Side side, double tol) {
  const std::size_t n = gens.count();
  if (c_left.dim() != n)
    throw InvalidArgument("integrability_check: structure constants do not match generators");
  const Tensor3 &c = c_left.flavor == Flavor::Left ? c_left.C : -c_left.C;
  const double sgn = side == Side::Left ? 1.0 : -1.0;
  double r = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < n; ++p) {
      RealMatrix lhs = gens.I[k] * gens.I[p] - gens.I[p] * gens.I[k];
      for (std::size_t t = 0; t < n; ++t) lhs -= gens.I[t] * (sgn * c(t, p, k));
      r = std::max(r, lhs.max_abs());
    }
  CheckReport out;
  out.add("rep_integrability", r, tol, 1);
  return out;
}

RepChart conjugate_rep(const RepChart &rep) {
  RepChart c;
  c.group = rep.group;
  c.m = rep.m;
  c.side = rep.side == Side::Left ? Side::Right : Side::Left;
  c.name = rep.name + "*";
  c.f = [base = rep](std::span<const double> a) { return invert(base(a)); };
  return c;
}

CheckReport conjugate_pairing_check(const RepChart &rep, const DiffConfig &cfg, double tol) {
  const RepChart dual = conjugate_rep(rep);
  Sampler s(cfg.rng_seed, "conjugate_pairing");
  ResidualTracker t;
  for (std::size_t i = 0; i < cfg.sample_count; ++i) {
    const Vec a = sample_point(*rep.group, s, cfg);
    Vec u(rep.m), v(rep.m);
    for (auto &x : u) x = s.uniform(-1.0, 1.0);
    for (auto &x : v) x = s.uniform(-1.0, 1.0);
    const Vec uf = left_multiply(u, dual(a));
    const Vec fv = rep(a) * v;
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t k = 0; k < rep.m; ++k) {
      lhs += uf[k] * fv[k];
      rhs += u[k] * v[k];
    }
    t.observe(std::fabs(lhs - rhs));
    t.count_sample();
  }
  CheckReport out;
  out.add("conjugate_pairing", t.max(), tol, t.samples());
  return out;
}

CheckReport conjugate_generators_check(const RepChart &rep, const DiffConfig &cfg,
                                       double tol) {
  const RepGenerators g = rep_generators(rep, cfg);
  const RepGenerators gc = rep_generators(conjugate_rep(rep), cfg);
  CheckReport out;
  out.add("conjugate_generators", max_abs_diff(gc, negate(g)), tol, 1);
  return out;
}

RepChart tensor_product(const RepChart &r1, const RepChart &r2) {
  require_compatible(r1, r2, "tensor_product");
  RepChart t;
  t.group = r1.group;
  t.m = r1.m * r2.m;
  t.side = r1.side;
  t.name = r1.name + "(x)" + r2.name;
  t.f = [a1 = r1, a2 = r2](std::span<const double> a) { return kron(a1(a), a2(a)); };
  return t;
}

RepGenerators tensor_generators(const RepGenerators &g1, const RepGenerators &g2) {
  require_same_count(g1, g2, "tensor_generators");
  const RealMatrix e1 = RealMatrix::identity(g1.dim()), e2 = RealMatrix::identity(g2.dim());
  RepGenerators out;
  for (std::size_t k = 0; k < g1.count(); ++k)
    out.I.push_back(kron(g1.I[k], e2) + kron(e1, g2.I[k]));
  return out;
}

RepChart direct_sum(const RepChart &r1, const RepChart &r2) {
  require_compatible(r1, r2, "direct_sum");
  RepChart d;
  d.group = r1.group;
  d.m = r1.m + r2.m;
  d.side = r1.side;
  d.name = r1.name + "(+)" + r2.name;
  d.f = [a1 = r1, a2 = r2](std::span<const double> a) { return block_diag(a1(a), a2(a)); };
  return d;
}

RepGenerators direct_sum_generators(const RepGenerators &g1, const RepGenerators &g2) {
  require_same_count(g1, g2, "direct_sum_generators");
  RepGenerators out;
  for (std::size_t k = 0; k < g1.count(); ++k) out.I.push_back(block_diag(g1.I[k], g2.I[k]));
  return out;
}

RepGenerators generator_transform(const RepChart &rep, const RepGenerators &gens,
                                  std::span<const double> g, const DiffConfig &cfg) {
  const GroupChart &grp = *rep.group;
  const BasicOperators ops = basic_operators(grp, g, cfg);
  const RealMatrix w = ops.lambda_l * ops.psi_r;
  const RealMatrix fg = rep(g);
  const RealMatrix fgi = invert(fg, cfg.rank_tol);
  RepGenerators out;
  for (std::size_t k = 0; k < grp.dim(); ++k) {
    const RealMatrix mid = contract(gens, w.column(k));
    out.I.push_back(rep.side == Side::Left ? fgi * mid * fg : fg * mid * fgi);
  }
  return out;
}

CheckReport generator_transform_check(const RepChart &rep, const RepGenerators &gens,
                                      const DiffConfig &cfg, double tol) {
  Sampler s(cfg.rng_seed, "generator_transform");
  ResidualTracker t;
  for (std::size_t i = 0; i < 5; ++i) {
    const Vec g = sample_point(*rep.group, s, cfg);
    t.observe(max_abs_diff(generator_transform(rep, gens, g, cfg), gens));
    t.count_sample();
  }
  CheckReport out;
  out.add("generator_transform", t.max(), tol, t.samples());
  return out;
}

CheckReport mixed_identity_check(const RepChart &rep, const RepGenerators &gens,
                                 const DiffConfig &cfg, double tol) {
  const GroupChart &g = *rep.group;
  Sampler s(cfg.rng_seed, "rep_mixed_identity");
  ResidualTracker t;
  for (std::size_t i = 0; i < cfg.sample_count; ++i) {
    const Vec a = sample_point(g, s, cfg);
    const BasicOperators ops = basic_operators(g, a, cfg);
    const RealMatrix fa = rep(a);
    for (std::size_t l = 0; l < g.dim(); ++l) {
      const RealMatrix wl = contract(gens, ops.lambda_l.column(l));
      const RealMatrix wr = contract(gens, ops.lambda_r.column(l));
      const RealMatrix r = rep.side == Side::Left ? wl * fa - fa * wr : fa * wl - wr * fa;
      t.observe(r.max_abs());
    }
    t.count_sample();
  }
  CheckReport out;
  out.add("rep_mixed_identity", t.max(), tol, t.samples());
  return out;
}

} // namespace liekit
