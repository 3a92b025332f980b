#include "liekit/flows.hpp"

#include "liekit/errors.hpp"

#include <cmath>

namespace liekit {

FlowResult one_param_subgroup(const GroupChart &chart, std::span<const double> alpha,
                              double t_end, std::size_t steps, Flavor flavor,
                              const DiffConfig &cfg) {
  const std::size_t n = chart.dim();
  if (alpha.size() != n) throw InvalidArgument("one_param_subgroup: alpha has wrong size");
  if (steps < 1) throw InvalidArgument("one_param_subgroup: steps must be >= 1");
  FlowResult res;
  res.alpha.assign(alpha.begin(), alpha.end());
  res.flavor = flavor;
  res.t_grid.reserve(steps + 1);
  res.path.reserve(steps + 1);

  const double dt = t_end / static_cast<double>(steps);
  auto rhs = [&](const Vec &c) {
    if (!chart.within(c)) throw LeftChart("one_param_subgroup: flow left the chart");
    return psi(chart, c, flavor, cfg) * alpha;
  };
  Vec c = chart.identity();
  res.t_grid.push_back(0.0);
  res.path.push_back(c);
  Vec tmp(n);
  for (std::size_t i = 0; i < steps; ++i) {
    const Vec k1 = rhs(c);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = c[j] + 0.5 * dt * k1[j];
    const Vec k2 = rhs(tmp);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = c[j] + 0.5 * dt * k2[j];
    const Vec k3 = rhs(tmp);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = c[j] + dt * k3[j];
    const Vec k4 = rhs(tmp);
    for (std::size_t j = 0; j < n; ++j)
      c[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    require_finite(c, "one_param_subgroup");
    if (!chart.within(c)) throw LeftChart("one_param_subgroup: flow left the chart");
    res.t_grid.push_back(static_cast<double>(i + 1) * dt);
    res.path.push_back(c);
  }
  return res;
}

CheckReport flow_homomorphism_check(const FlowResult &flow, const GroupChart &chart,
                                    std::size_t grid_points, double tol) {
  const std::size_t steps = flow.path.size() - 1;
  if (grid_points < 2 || steps % (grid_points - 1) != 0)
    throw InvalidArgument("flow_homomorphism_check: grid must divide the step count");
  const std::size_t stride = steps / (grid_points - 1);
  ResidualTracker tr;
  for (std::size_t i = 0; i < grid_points; ++i)
    for (std::size_t j = 0; i + j < grid_points; ++j) {
      const Vec &ct = flow.path[i * stride];
      const Vec &cs = flow.path[j * stride];
      const Vec &cts = flow.path[(i + j) * stride];
      tr.observe(max_abs_diff(chart.compose(ct, cs), cts));
      tr.count_sample();
    }
  CheckReport r;
  r.add("flow_homomorphism_" + std::string(flavor_name(flow.flavor)), tr.max(), tol,
        tr.samples());
  return r;
}

namespace {

constexpr double kZeroPsiFloor = 1e-12;

struct Simpson {
  const GroupChart &chart;
  const DiffConfig &cfg;

  double integrand(double x) const {
    const Vec p{x};
    const double v = psi(chart, p, Flavor::Right, cfg)(0, 0);
    if (std::fabs(v) < kZeroPsiFloor) throw ZeroPsi("canonical_coordinate: psi_r vanishes");
    return 1.0 / v;
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) const {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = integrand(lm), frm = integrand(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }
};

} // namespace

double canonical_coordinate(const GroupChart &chart, double a, const DiffConfig &cfg) {
  if (chart.dim() != 1) throw InvalidArgument("canonical_coordinate: chart must be 1-dimensional");
  const double e = chart.identity()[0];
  if (a == e) return 0.0;
  Simpson s{chart, cfg};
  const double fa = s.integrand(e), fb = s.integrand(a), fm = s.integrand(0.5 * (e + a));
  const double whole = (a - e) / 6.0 * (fa + 4.0 * fm + fb);
  return s.refine(e, a, fa, fm, fb, whole, 1e-9, 40);
}

CheckReport additivity_check(const GroupChart &chart, const DiffConfig &cfg,
                             std::optional<std::pair<double, double>> range, double tol) {
  if (chart.dim() != 1) throw InvalidArgument("additivity_check: chart must be 1-dimensional");
  Sampler s(cfg.rng_seed, "canonical_additivity");
  ResidualTracker tr;
  for (std::size_t k = 0; k < cfg.sample_count; ++k) {
    double a, b;
    if (range) {
      a = s.uniform(range->first, range->second);
      b = s.uniform(range->first, range->second);
    } else {
      a = sample_point(chart, s, cfg)[0];
      b = sample_point(chart, s, cfg)[0];
    }
    const double ab = chart.compose(Vec{a}, Vec{b})[0];
    tr.observe(canonical_coordinate(chart, ab, cfg) - canonical_coordinate(chart, a, cfg) -
               canonical_coordinate(chart, b, cfg));
    tr.count_sample();
  }
  CheckReport r;
  r.add("canonical_additivity", tr.max(), tol, tr.samples());
  return r;
}

} // namespace liekit
