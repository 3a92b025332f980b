#include "liekit/suites.hpp"

#include "liekit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace liekit {

namespace {

constexpr double kLn = 1e-7;

void prefix_ids(CheckReport &r, const std::string &prefix) {
  for (auto &c : r.checks) c.id = prefix + c.id;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"shift", "structure", "flows", "rep", "pde", "all"};
  return names;
}

CheckReport operator_oracle_check(const CatalogEntry &e, const DiffConfig &cfg, double tol,
                                  double inverse_tol) {
  const GroupChart &g = *e.chart;
  const GroupOracles &o = e.oracles;
  Sampler s(cfg.rng_seed, "operator_oracles");
  ResidualTracker t[5];
  for (std::size_t k = 0; k < cfg.sample_count; ++k) {
    const Vec a = sample_point(g, s, cfg);
    const BasicOperators ops = basic_operators(g, a, cfg);
    if (o.psi_l) t[0].observe(max_abs_diff(ops.psi_l, (*o.psi_l)(a)));
    if (o.psi_r) t[1].observe(max_abs_diff(ops.psi_r, (*o.psi_r)(a)));
    if (o.lambda_l) t[2].observe(max_abs_diff(ops.lambda_l, (*o.lambda_l)(a)));
    if (o.lambda_r) t[3].observe(max_abs_diff(ops.lambda_r, (*o.lambda_r)(a)));
    if (o.inverse) t[4].observe(max_abs_diff(inverse(g, a, cfg), (*o.inverse)(a)));
    for (auto &x : t) x.count_sample();
  }
  CheckReport out;
  if (o.psi_l) out.add("oracle_psi_l", t[0].max(), tol, t[0].samples());
  if (o.psi_r) out.add("oracle_psi_r", t[1].max(), tol, t[1].samples());
  if (o.lambda_l) out.add("oracle_lambda_l", t[2].max(), tol, t[2].samples());
  if (o.lambda_r) out.add("oracle_lambda_r", t[3].max(), tol, t[3].samples());
  if (o.inverse) out.add("oracle_inverse", t[4].max(), inverse_tol, t[4].samples());
  return out;
}

CheckReport shift_suite(const CatalogEntry &e, const DiffConfig &cfg) {
  CheckReport r = verify_chart(*e.chart, cfg);
  r.append(verify_shift_identities(*e.chart, cfg));
  r.append(operator_oracle_check(e, cfg));
  return r;
}

CheckReport structure_suite(const CatalogEntry &e, const DiffConfig &cfg) {
  const GroupChart &g = *e.chart;
  CheckReport r;
  const GroupGenerators gens = group_generators(g, cfg);
  r.add("generators_swap", gens.swap_residual(), 1e-4, 1);
  if (e.oracles.I) r.add("oracle_generators", max_abs_diff(gens.I, *e.oracles.I), 1e-4, 1);

  const StructureConstants cl = structure_constants(gens, Flavor::Left);
  const StructureConstants cr = structure_constants(gens, Flavor::Right);
  if (e.oracles.C_left)
    r.add("oracle_structure_left", max_abs_diff(cl.C, *e.oracles.C_left), 1e-4, 1);
  for (const StructureConstants *c : {&cl, &cr}) {
    const std::string f(flavor_name(c->flavor));
    r.add("antisymmetry_" + f, c->antisymmetry_residual(), 1e-6, 1);
    r.add("jacobi_" + f, c->jacobi_residual(), 1e-4, 1);
  }

  // Constants evaluated away from e through psi and d(lambda): constant in
  // a, and right = -left.
  Sampler s(cfg.rng_seed, "structure_at_point");
  ResidualTracker constancy[2], anti;
  for (std::size_t k = 0; k < cfg.sample_count; ++k) {
    const Vec a = sample_point(g, s, cfg);
    const StructureConstants pl = structure_constants_at_point(g, a, Flavor::Left, cfg);
    const StructureConstants pr = structure_constants_at_point(g, a, Flavor::Right, cfg);
    constancy[0].observe(max_abs_diff(pl.C, cl.C));
    constancy[1].observe(max_abs_diff(pr.C, cr.C));
    anti.observe(max_abs_diff(pr.C, -pl.C));
    constancy[0].count_sample();
    constancy[1].count_sample();
    anti.count_sample();
  }
  r.add("constancy_left", constancy[0].max(), 1e-4, constancy[0].samples());
  r.add("constancy_right", constancy[1].max(), 1e-4, constancy[1].samples());
  r.add("anti_isomorphism", anti.max(), 1e-4, anti.samples());

  for (Flavor f : {Flavor::Left, Flavor::Right}) {
    r.append(maurer_residual(g, f, cfg));
    r.append(invariant_field_commutators(g, f, cfg));
  }
  return r;
}

CheckReport flows_suite(const CatalogEntry &e, const DiffConfig &cfg) {
  const GroupChart &g = *e.chart;
  const std::size_t n = g.dim();
  CheckReport r;

  Sampler s(cfg.rng_seed, "flow_alpha");
  const Vec alpha = s.in_ball(Vec(n, 0.0), 0.3);
  for (Flavor f : {Flavor::Left, Flavor::Right}) {
    const FlowResult flow = one_param_subgroup(g, alpha, 1.0, 999, f, cfg);
    r.append(flow_homomorphism_check(flow, g));
  }

  // gl:n with n >= 2: alpha = 0.8 E_{1n} is nilpotent, so c(1) = 1 + alpha.
  if (e.name.rfind("gl:", 0) == 0 && n > 1) {
    const std::size_t m = static_cast<std::size_t>(std::lround(std::sqrt(double(n))));
    Vec nil(n, 0.0);
    nil[m - 1] = 0.8;
    const FlowResult flow = one_param_subgroup(g, nil, 1.0, 1000, Flavor::Right, cfg);
    Vec expect = g.identity();
    expect[m - 1] += 0.8;
    r.add("flow_nilpotent", max_abs_diff(flow.end(), expect), 1e-8, 1);
  }

  if (e.name == "multiplicative") {
    Sampler sl(cfg.rng_seed, "canonical_log");
    ResidualTracker t;
    for (std::size_t k = 0; k < cfg.sample_count; ++k) {
      const double a = sl.uniform(0.5, 2.0);
      t.observe(canonical_coordinate(g, a, cfg) - std::log(a));
      t.count_sample();
    }
    r.add("canonical_log", t.max(), kLn, t.samples());
    r.append(additivity_check(g, cfg, std::pair{0.5, 2.0}));
  } else if (n == 1) {
    r.append(additivity_check(g, cfg));
  }
  return r;
}

CheckReport rep_suite(const CatalogEntry &e, const CatalogRep &cr, const DiffConfig &cfg) {
  const RepChart &rep = cr.rep;
  CheckReport r = rep_axioms(rep, cfg);
  const RepGenerators gens = rep_generators(rep, cfg);
  if (cr.generators) r.add("oracle_rep_generators", max_abs_diff(gens, *cr.generators), 1e-5, 1);

  r.append(rep_pde_residual(rep, gens, cfg));
  const StructureConstants cl = structure_constants(group_generators(*e.chart, cfg), Flavor::Left);
  r.append(integrability_check(gens, cl, rep.side));
  r.append(conjugate_pairing_check(rep, cfg));
  r.append(conjugate_generators_check(rep, cfg));

  const RepGenerators twice = rep_generators(conjugate_rep(conjugate_rep(rep)), cfg);
  r.add("double_conjugate", max_abs_diff(twice, gens), 1e-5, 1);

  const RepChart tp = tensor_product(rep, rep);
  r.add("tensor_generators", max_abs_diff(rep_generators(tp, cfg), tensor_generators(gens, gens)),
        1e-4, 1);
  CheckReport tax = rep_axioms(tp, cfg);
  prefix_ids(tax, "tensor_");
  r.append(tax);

  const RepChart ds = direct_sum(rep, rep);
  r.add("direct_sum_generators",
        max_abs_diff(rep_generators(ds, cfg), direct_sum_generators(gens, gens)), 1e-5, 1);
  CheckReport dax = rep_axioms(ds, cfg);
  prefix_ids(dax, "direct_sum_");
  r.append(dax);

  r.append(generator_transform_check(rep, gens, cfg));
  r.append(mixed_identity_check(rep, gens, cfg));
  return r;
}

CheckReport pde_suite(const CatalogEntry &e, const DiffConfig &cfg) {
  CheckReport r = integrability_residual(exponential_system(2), cfg);

  const CheckRecord skew = integrability_residual(skew_system(), cfg).checks.front();
  r.add("pde_nonintegrable", std::fabs(skew.max_residual - 1.0), 1e-6, skew.samples);

  const PDESystem ex = exponential_system(2);
  const Vec c{1.0}, x0{0.0, 0.0}, x1{0.1, 0.2};
  const Vec direct = taylor_solve(ex, c, x0, x1, cfg);
  r.add("pde_solution", std::fabs(direct[0] - std::exp(0.3)), 1e-5, 1);
  const Vec via1 = taylor_solve_path(ex, c, {x0, {0.1, 0.0}, x1}, cfg);
  const Vec via2 = taylor_solve_path(ex, c, {x0, {0.0, 0.2}, x1}, cfg);
  r.add("pde_path_independence",
        std::max({std::fabs(via1[0] - direct[0]), std::fabs(via2[0] - direct[0])}), 1e-6, 3);

  const TaylorCoefficients tc = taylor_coefficients(ex, c, x0, cfg);
  double tr = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    tr = std::max(tr, std::fabs(tc.first(0, i) - 1.0));
    for (std::size_t j = 0; j < 2; ++j) tr = std::max(tr, std::fabs(tc.second(0, i, j) - 1.0));
  }
  r.add("pde_taylor_coefficients", tr, 1e-6, 1);

  const std::size_t expected[] = {1, 2, 1, 0};
  const auto fams = bundled_families();
  for (std::size_t k = 0; k < fams.size(); ++k) {
    const double got = static_cast<double>(essential_count(fams[k], cfg));
    r.add("essential_" + fams[k].name, std::fabs(got - double(expected[k])), 0.0, 1);
  }
  const double n = static_cast<double>(e.chart->dim());
  r.add("essential_phi",
        std::fabs(double(essential_count(phi_family(*e.chart, cfg.sample_radius), cfg)) - n), 0.0,
        1);
  return r;
}

CheckReport run_suite(const SuiteOptions &opt) {
  const auto &names = suite_names();
  if (std::find(names.begin(), names.end(), opt.suite) == names.end())
    throw UnknownEntry("unknown suite '" + opt.suite + "'");
  if (!(opt.tol_scale > 0.0)) throw InvalidArgument("tol-scale must be > 0");
  opt.cfg.validate();

  const CatalogEntry e = get_group(opt.group);
  std::vector<std::string> rep_names;
  if (opt.rep) {
    if (!e.reps.count(*opt.rep))
      throw UnknownEntry("unknown representation '" + *opt.rep + "' for group " + opt.group);
    rep_names.push_back(*opt.rep);
  } else {
    for (const auto &[name, _] : e.reps) rep_names.push_back(name);
  }

  const bool all = opt.suite == "all";
  CheckReport r;
  if (all || opt.suite == "shift") r.append(shift_suite(e, opt.cfg));
  if (all || opt.suite == "structure") r.append(structure_suite(e, opt.cfg));
  if (all || opt.suite == "flows") r.append(flows_suite(e, opt.cfg));
  if (all || opt.suite == "rep")
    for (const auto &name : rep_names) {
      CheckReport rr = rep_suite(e, e.reps.at(name), opt.cfg);
      if (!opt.rep) prefix_ids(rr, name + "/");
      r.append(rr);
    }
  if (all || opt.suite == "pde") r.append(pde_suite(e, opt.cfg));

  for (auto &c : r.checks) {
    c.tolerance *= opt.tol_scale;
    c.pass = c.max_residual <= c.tolerance;
  }
  r.suite = opt.suite;
  r.group = opt.group;
  r.rep = opt.rep;
  r.seed = opt.cfg.rng_seed;
  r.fd_step = opt.cfg.h;
  return r;
}

} // namespace liekit
