#include "liekit/pde.hpp"

#include "liekit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace liekit {

namespace {

Vec flatten(const RealMatrix &m) { return Vec(m.data().begin(), m.data().end()); }

// d psi^alpha_j / dx^i plus the chain-rule term through theta, i.e. the
// second x-derivative of a solution through (theta, x). [alpha][i][j]
Tensor3 total_derivative(const PDESystem &sys, std::span<const double> theta,
                         std::span<const double> x, const DiffConfig &cfg) {
  const std::size_t m = sys.m, n = sys.n;
  const RealMatrix p = sys(theta, x);
  const RealMatrix jx = jacobian(
      [&](std::span<const double> y) { return flatten(sys(theta, y)); }, x, cfg);
  const RealMatrix jt = jacobian(
      [&](std::span<const double> t) { return flatten(sys(t, x)); }, theta, cfg);
  Tensor3 d(m, n, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = jx(a * n + i, j);
        for (std::size_t sg = 0; sg < m; ++sg) s += jt(a * n + i, sg) * p(sg, j);
        d(a, i, j) = s;
      }
  return d;
}

void require_sizes(const PDESystem &sys, std::span<const double> c, std::span<const double> x,
                   std::string_view what) {
  if (c.size() != sys.m || x.size() != sys.n)
    throw InvalidArgument(std::string(what) + ": wrong vector size for system " + sys.name);
}

Vec rk4_segment(const PDESystem &sys, Vec theta, std::span<const double> x0,
                std::span<const double> x1, std::size_t steps) {
  const std::size_t n = sys.n;
  Vec d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = x1[i] - x0[i];
  auto rhs = [&](const Vec &th, double t) {
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = x0[i] + t * d[i];
    return sys(th, x) * d;
  };
  auto shifted = [](const Vec &v, const Vec &k, double s) {
    Vec r(v);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * k[i];
    return r;
  };
  const double h = 1.0 / static_cast<double>(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = k * h;
    const Vec k1 = rhs(theta, t);
    const Vec k2 = rhs(shifted(theta, k1, h / 2), t + h / 2);
    const Vec k3 = rhs(shifted(theta, k2, h / 2), t + h / 2);
    const Vec k4 = rhs(shifted(theta, k3, h), t + h);
    for (std::size_t i = 0; i < theta.size(); ++i)
      theta[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  require_finite(theta, "taylor_solve");
  return theta;
}

} // namespace

RealMatrix PDESystem::operator()(std::span<const double> theta,
                                 std::span<const double> x) const {
  RealMatrix r = psi(theta, x);
  if (r.rows() != m || r.cols() != n)
    throw InvalidArgument("PDE system '" + name + "' returned a matrix of the wrong size");
  require_finite(r.data(), name);
  return r;
}

CheckReport integrability_residual(const PDESystem &sys, const DiffConfig &cfg, double tol) {
  Sampler s(cfg.rng_seed, "pde_integrability");
  ResidualTracker t;
  for (std::size_t k = 0; k < cfg.sample_count; ++k) {
    const Vec theta = s.in_ball(sys.theta_center, sys.box_radius);
    const Vec x = s.in_ball(sys.x_center, sys.box_radius);
    const Tensor3 d = total_derivative(sys, theta, x, cfg);
    for (std::size_t a = 0; a < sys.m; ++a)
      for (std::size_t i = 0; i < sys.n; ++i)
        for (std::size_t j = i + 1; j < sys.n; ++j) t.observe(d(a, i, j) - d(a, j, i));
    t.count_sample();
  }
  CheckReport out;
  out.add("pde_integrability", t.max(), tol, t.samples());
  return out;
}

Vec taylor_solve(const PDESystem &sys, std::span<const double> c, std::span<const double> x0,
                 std::span<const double> x1, const DiffConfig &cfg, const SolveOptions &opt) {
  return taylor_solve_path(sys, c, {Vec(x0.begin(), x0.end()), Vec(x1.begin(), x1.end())}, cfg,
                           opt);
}

Vec taylor_solve_path(const PDESystem &sys, std::span<const double> c,
                      const std::vector<Vec> &path, const DiffConfig &cfg,
                      const SolveOptions &opt) {
  if (path.empty()) throw InvalidArgument("taylor_solve: empty path");
  if (opt.steps_per_segment == 0) throw InvalidArgument("taylor_solve: zero steps");
  for (const Vec &x : path) require_sizes(sys, c, x, "taylor_solve");
  if (sys.n > 1) {
    const CheckRecord r = integrability_residual(sys, cfg, opt.integrability_tol).checks.front();
    if (!r.pass)
      throw NotIntegrable("system " + sys.name + " fails the integrability condition (residual " +
                          std::to_string(r.max_residual) + ")");
  }
  Vec theta(c.begin(), c.end());
  for (std::size_t k = 1; k < path.size(); ++k)
    theta = rk4_segment(sys, std::move(theta), path[k - 1], path[k], opt.steps_per_segment);
  return theta;
}

Vec TaylorCoefficients::evaluate(std::span<const double> x0, std::span<const double> x) const {
  const std::size_t m = value.size(), n = x.size();
  Vec out(value);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      const double di = x[i] - x0[i];
      out[a] += first(a, i) * di;
      for (std::size_t j = 0; j < n; ++j) out[a] += 0.5 * second(a, i, j) * di * (x[j] - x0[j]);
    }
  return out;
}

TaylorCoefficients taylor_coefficients(const PDESystem &sys, std::span<const double> c,
                                       std::span<const double> x0, const DiffConfig &cfg) {
  require_sizes(sys, c, x0, "taylor_coefficients");
  TaylorCoefficients t;
  t.value.assign(c.begin(), c.end());
  t.first = sys(c, x0);
  t.second = total_derivative(sys, c, x0, cfg);
  return t;
}

PDESystem exponential_system(std::size_t n) {
  PDESystem s;
  s.name = "exponential:" + std::to_string(n);
  s.m = 1;
  s.n = n;
  s.psi = [n](std::span<const double> th, std::span<const double>) {
    return RealMatrix(1, n, Vec(n, th[0]));
  };
  s.theta_center = {1.0};
  s.x_center = Vec(n, 0.0);
  return s;
}

PDESystem skew_system() {
  PDESystem s;
  s.name = "skew";
  s.m = 1;
  s.n = 2;
  s.psi = [](std::span<const double>, std::span<const double> x) {
    return RealMatrix(1, 2, {x[1], 0.0});
  };
  s.theta_center = {0.0};
  s.x_center = {0.0, 0.0};
  return s;
}

PDESystem zero_system(std::size_t m, std::size_t n) {
  PDESystem s;
  s.name = "zero";
  s.m = m;
  s.n = n;
  s.psi = [m, n](std::span<const double>, std::span<const double>) { return RealMatrix(m, n); };
  s.theta_center = Vec(m, 0.0);
  s.x_center = Vec(n, 0.0);
  return s;
}

// ------------------------------------------------------- essential parameters

namespace {

// Nested central difference of f^i along the variables listed in `idx`,
// all at the same step.
Vec x_derivative(const FunctionFamily &fam, std::span<const double> a, Vec x,
                 std::span<const std::size_t> idx, const DiffConfig &cfg) {
  if (idx.empty()) {
    Vec v = fam.f(x, a);
    if (v.size() != fam.nf) throw InvalidArgument("family " + fam.name + ": wrong output size");
    require_finite(v, fam.name);
    return v;
  }
  const std::size_t j = idx.back();
  const auto rest = idx.first(idx.size() - 1);
  const double x0 = x[j], h = cfg.step_for(x0);
  x[j] = x0 + h;
  const double xp = x[j];
  Vec fp = x_derivative(fam, a, x, rest, cfg);
  x[j] = x0 - h;
  const double xm = x[j];
  const Vec fm = x_derivative(fam, a, x, rest, cfg);
  for (std::size_t i = 0; i < fp.size(); ++i) fp[i] = (fp[i] - fm[i]) / (xp - xm);
  return fp;
}

// Non-decreasing index tuples of length t over nx variables.
std::vector<std::vector<std::size_t>> multi_indices(std::size_t nx, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto &self, std::size_t from) -> void {
    if (cur.size() == t) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = from; j < nx; ++j) {
      cur.push_back(j);
      self(self, j);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace

std::vector<std::size_t> essential_param_ranks(const FunctionFamily &fam,
                                               const DiffConfig &cfg) {
  if (fam.x_lo.size() != fam.nx || fam.x_hi.size() != fam.nx || fam.a0.size() != fam.r)
    throw InvalidArgument("family " + fam.name + ": box or base point has the wrong size");

  Sampler s(cfg.rng_seed, "essential_params");
  std::vector<Vec> xs(cfg.sample_count, Vec(fam.nx));
  for (Vec &x : xs)
    for (std::size_t j = 0; j < fam.nx; ++j) x[j] = s.uniform(fam.x_lo[j], fam.x_hi[j]);

  // The parameter derivative sits on top of nested x-differences, so it
  // takes the larger second-order step.
  const DiffConfig ca = cfg.second_order();
  std::vector<double> rows;
  std::size_t nrows = 0;
  std::vector<std::size_t> mu;
  for (std::size_t order = 0; order <= fam.s_max; ++order) {
    DiffConfig cx = cfg;
    cx.h = std::pow(cfg.h, 1.0 / static_cast<double>(order + 1));
    for (const auto &idx : multi_indices(fam.nx, order))
      for (const Vec &x : xs) {
        const RealMatrix j = jacobian(
            [&](std::span<const double> a) { return x_derivative(fam, a, x, idx, cx); }, fam.a0,
            ca);
        for (std::size_t i = 0; i < j.rows(); ++i) {
          const auto r = j.row(i);
          rows.insert(rows.end(), r.begin(), r.end());
          ++nrows;
        }
      }
    const std::size_t rank =
        fam.r == 0 ? 0 : numeric_rank(RealMatrix(nrows, fam.r, rows), cfg.rank_tol);
    mu.push_back(rank);
    if (rank == fam.r || rank == 0) break;
    if (mu.size() > 1 && rank == mu[mu.size() - 2]) break;
  }
  return mu;
}

std::size_t essential_count(const FunctionFamily &fam, const DiffConfig &cfg) {
  const auto mu = essential_param_ranks(fam, cfg);
  return *std::max_element(mu.begin(), mu.end());
}

FunctionFamily phi_family(const GroupChart &chart, double radius) {
  const std::size_t n = chart.dim();
  FunctionFamily f;
  f.name = "phi:" + chart.name();
  f.nf = f.nx = f.r = n;
  f.f = [chart](std::span<const double> b, std::span<const double> a) {
    return chart.compose(a, b);
  };
  f.a0 = chart.identity();
  f.x_lo = f.x_hi = chart.identity();
  for (std::size_t k = 0; k < n; ++k) {
    f.x_lo[k] -= radius;
    f.x_hi[k] += radius;
  }
  return f;
}

std::vector<FunctionFamily> bundled_families() {
  auto scalar = [](std::string name, std::size_t r, auto fn) {
    FunctionFamily f;
    f.name = std::move(name);
    f.nf = f.nx = 1;
    f.r = r;
    f.f = [fn](std::span<const double> x, std::span<const double> a) { return Vec{fn(x[0], a)}; };
    f.x_lo = {-1.0};
    f.x_hi = {1.0};
    f.a0 = Vec(r, 0.5);
    return f;
  };
  return {
      scalar("shifted_sum", 2, [](double x, std::span<const double> a) { return x + a[0] + a[1]; }),
      scalar("linear", 2, [](double x, std::span<const double> a) { return a[0] * x + a[1]; }),
      scalar("scaled_sum", 2,
             [](double x, std::span<const double> a) { return (a[0] + a[1]) * x; }),
      scalar("constant", 1, [](double, std::span<const double> a) { return a[0] * 0.0; }),
  };
}

} // namespace liekit
