#include "liekit/group.hpp"

#include "liekit/errors.hpp"
#include "liekit/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace liekit {

std::string_view flavor_name(Flavor f) { return f == Flavor::Left ? "left" : "right"; }

GroupChart::GroupChart(std::string name, std::size_t n, BiMap compose, Vec identity,
                       std::optional<VecMap> inverse_hint, double chart_radius)
    : name_(std::move(name)), n_(n), compose_(std::move(compose)), identity_(std::move(identity)),
      inverse_hint_(std::move(inverse_hint)), radius_(chart_radius) {
  if (n_ == 0) throw InvalidArgument("GroupChart: dimension must be positive");
  if (identity_.size() != n_) throw InvalidArgument("GroupChart: identity has wrong size");
  if (!compose_) throw InvalidArgument("GroupChart: missing composition law");
  if (!(radius_ > 0.0)) throw InvalidArgument("GroupChart: chart_radius must be > 0");
  require_finite(identity_, "GroupChart identity");
}

Vec GroupChart::compose(std::span<const double> a, std::span<const double> b) const {
  if (a.size() != n_ || b.size() != n_) throw InvalidArgument("compose: wrong point size");
  Vec c = compose_(a, b);
  if (c.size() != n_) throw InvalidArgument("compose: law returned wrong size");
  require_finite(c, "composition law");
  return c;
}

bool GroupChart::within(std::span<const double> a) const {
  if (a.size() != n_) return false;
  return max_abs_diff(a, identity_) <= radius_;
}

// ------------------------------------------------------------------ inverse

namespace {

constexpr int kNewtonMaxIter = 50;
constexpr double kNewtonDampFloor = 0x1.0p-20;

double residual_norm(const GroupChart &chart, std::span<const double> a,
                     std::span<const double> x) {
  return max_abs_diff(chart.compose(a, x), chart.identity());
}

} // namespace

Vec inverse(const GroupChart &chart, std::span<const double> a, const DiffConfig &cfg) {
  if (a.size() != chart.dim()) throw InvalidArgument("inverse: wrong point size");
  if (chart.inverse_hint()) {
    Vec x = (*chart.inverse_hint())(a);
    require_finite(x, "inverse_hint");
    return x;
  }
  const Vec &e = chart.identity();
  const double tol = 1e-14 * std::max(1.0, kernels::max_abs(e));
  // First-order guess: a^{-1} ~ 2e - a.
  Vec x(chart.dim());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2.0 * e[i] - a[i];
  double res = residual_norm(chart, a, x);
  for (int iter = 0; iter < kNewtonMaxIter && res > tol; ++iter) {
    Vec r = chart.compose(a, x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= e[i];
    const RealMatrix step_dir = invert(shift_right(chart, a, x, cfg), cfg.rank_tol);
    const Vec dx = step_dir * r;
    double damp = 1.0;
    bool improved = false;
    Vec trial(x.size());
    while (damp >= kNewtonDampFloor) {
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - damp * dx[i];
      double tres;
      try {
        tres = residual_norm(chart, a, trial);
      } catch (const NonFiniteEvaluation &) {
        damp *= 0.5;
        continue;
      }
      if (tres < res) {
        x = trial;
        res = tres;
        improved = true;
        break;
      }
      damp *= 0.5;
    }
    // Stalled at round-off level: accept if already tight.
    if (!improved) break;
  }
  if (!(res <= 1e-10 * std::max(1.0, kernels::max_abs(e))))
    throw NoConvergence("inverse: Newton iteration did not converge");
  return x;
}

// ------------------------------------------------------------------- shifts

RealMatrix shift_left(const GroupChart &chart, std::span<const double> a,
                      std::span<const double> b, const DiffConfig &cfg) {
  Vec bb(b.begin(), b.end());
  return jacobian([&](std::span<const double> x) { return chart.compose(x, bb); }, a, cfg);
}

RealMatrix shift_right(const GroupChart &chart, std::span<const double> a,
                       std::span<const double> b, const DiffConfig &cfg) {
  Vec aa(a.begin(), a.end());
  return jacobian([&](std::span<const double> x) { return chart.compose(aa, x); }, b, cfg);
}

ShiftJacobians shift_jacobians(const GroupChart &chart, std::span<const double> a,
                               std::span<const double> b, const DiffConfig &cfg) {
  return {shift_left(chart, a, b, cfg), shift_right(chart, a, b, cfg)};
}

RealMatrix psi(const GroupChart &chart, std::span<const double> a, Flavor f,
               const DiffConfig &cfg) {
  return f == Flavor::Left ? shift_left(chart, chart.identity(), a, cfg)
                           : shift_right(chart, a, chart.identity(), cfg);
}

BasicOperators basic_operators(const GroupChart &chart, std::span<const double> a,
                               const DiffConfig &cfg) {
  BasicOperators ops;
  ops.psi_l = psi(chart, a, Flavor::Left, cfg);
  ops.psi_r = psi(chart, a, Flavor::Right, cfg);
  ops.lambda_l = invert(ops.psi_l, cfg.rank_tol);
  ops.lambda_r = invert(ops.psi_r, cfg.rank_tol);
  return ops;
}

TangentVector transport(const GroupChart &chart, std::span<const double> a,
                        std::span<const double> alpha, Flavor f, const DiffConfig &cfg) {
  return {psi(chart, a, f, cfg) * alpha, Vec(a.begin(), a.end())};
}

Vec sample_point(const GroupChart &chart, Sampler &sampler, const DiffConfig &cfg) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec a = sampler.in_ball(chart.identity(), cfg.sample_radius);
    if (!chart.within(a)) continue;
    try {
      if (chart.within(inverse(chart, a, cfg))) return a;
    } catch (const NumericalError &) {
    }
  }
  throw NoConvergence("sample_point: no admissible point in the sampling ball");
}

// --------------------------------------------------------------- identities

CheckReport verify_chart(const GroupChart &chart, const DiffConfig &cfg, double tol) {
  Sampler s(cfg.rng_seed, "chart");
  ResidualTracker unit, assoc;
  const Vec &e = chart.identity();
  for (std::size_t k = 0; k < cfg.sample_count; ++k) {
    Vec a = sample_point(chart, s, cfg), b = sample_point(chart, s, cfg),
        c = sample_point(chart, s, cfg);
    unit.observe(max_abs_diff(chart.compose(a, e), a));
    unit.observe(max_abs_diff(chart.compose(e, a), a));
    unit.count_sample();
    assoc.observe(max_abs_diff(chart.compose(a, chart.compose(b, c)),
                               chart.compose(chart.compose(a, b), c)));
    assoc.count_sample();
  }
  CheckReport r;
  r.add("chart_unit", unit.max(), tol, unit.samples());
  r.add("chart_associativity", assoc.max(), tol, assoc.samples());
  return r;
}

namespace {

// Records of the shift-identity suite, in report order.
enum ShiftCheck {
  kUnitLeft,
  kUnitRight,
  kCocycleRight,
  kCocycleLeft,
  kShiftInverseLeft,
  kShiftInverseRight,
  kLambdaRightClosed,
  kLambdaLeftClosed,
  kFactorRight,
  kFactorLeft,
  kComposePdeRight,
  kComposePdeLeft,
  kInverseDerivLeft,
  kInverseDerivRight,
  kQuotientLeft,
  kQuotientRight,
  kTripleLeft,
  kTripleRight,
  kConjugationA,
  kConjugationBLeft,
  kConjugationBRight,
  kAdjointDerivative,
  kAdjointIdentity,
  kShiftCheckCount
};

constexpr const char *kShiftCheckIds[kShiftCheckCount] = {
    "unit_shift_left",        "unit_shift_right",        "cocycle_right",
    "cocycle_left",           "shift_inverse_left",      "shift_inverse_right",
    "lambda_right_closed",    "lambda_left_closed",      "factor_right",
    "factor_left",            "compose_pde_right",       "compose_pde_left",
    "inverse_derivative_left", "inverse_derivative_right", "quotient_left",
    "quotient_right",         "triple_left",             "triple_right",
    "conjugation_a",          "conjugation_b_left",      "conjugation_b_right",
    "adjoint_derivative",     "adjoint_identity"};

} // namespace

CheckReport verify_shift_identities(const GroupChart &chart, const DiffConfig &cfg,
                                    double tol) {
  Sampler s(cfg.rng_seed, "shift_identities");
  const Vec &e = chart.identity();
  const std::size_t n = chart.dim();
  const RealMatrix id = RealMatrix::identity(n);
  ResidualTracker t[kShiftCheckCount];

  auto mul = [&](std::span<const double> x, std::span<const double> y) {
    return chart.compose(x, y);
  };
  auto inv = [&](std::span<const double> x) { return inverse(chart, x, cfg); };
  auto A_l = [&](std::span<const double> x, std::span<const double> y) {
    return shift_left(chart, x, y, cfg);
  };
  auto A_r = [&](std::span<const double> x, std::span<const double> y) {
    return shift_right(chart, x, y, cfg);
  };
  auto ops = [&](std::span<const double> x) { return basic_operators(chart, x, cfg); };

  for (std::size_t k = 0; k < cfg.sample_count; ++k) {
    const Vec a = sample_point(chart, s, cfg);
    const Vec b = sample_point(chart, s, cfg);
    const Vec c = sample_point(chart, s, cfg);
    const Vec ai = inv(a), bi = inv(b);
    const Vec ab = mul(a, b), bc = mul(b, c), abc = mul(ab, c);
    const BasicOperators Oa = ops(a), Ob = ops(b), Oab = ops(ab), Obc = ops(bc),
                         Oabc = ops(abc), Oai = ops(ai);

    t[kUnitLeft].observe(max_abs_diff(A_l(a, e), id));
    t[kUnitRight].observe(max_abs_diff(A_r(e, b), id));

    t[kCocycleRight].observe(max_abs_diff(A_r(a, bc) * A_r(b, c), A_r(ab, c)));
    t[kCocycleLeft].observe(max_abs_diff(A_l(ab, c) * A_l(a, b), A_l(a, bc)));

    const RealMatrix Al_ab = A_l(a, b), Ar_ab = A_r(a, b);
    t[kShiftInverseLeft].observe(max_abs_diff(A_l(ab, bi) * Al_ab, id));
    t[kShiftInverseRight].observe(max_abs_diff(A_r(bi, bc) * A_r(b, c), id));

    t[kLambdaRightClosed].observe(max_abs_diff(Oa.lambda_r, A_r(ai, a)));
    t[kLambdaLeftClosed].observe(max_abs_diff(Oa.lambda_l, A_l(a, ai)));

    t[kFactorRight].observe(max_abs_diff(Ar_ab, Oab.psi_r * Ob.lambda_r));
    t[kFactorLeft].observe(max_abs_diff(Al_ab, Oab.psi_l * Oa.lambda_l));

    // Same differential equations with the roles of the factors exchanged.
    const Vec ba = mul(b, a);
    const BasicOperators Oba = ops(ba);
    t[kComposePdeRight].observe(max_abs_diff(A_r(b, a), Oba.psi_r * Oa.lambda_r));
    t[kComposePdeLeft].observe(max_abs_diff(A_l(b, a), Oba.psi_l * Ob.lambda_l));

    const RealMatrix dinv = jacobian(inv, a, cfg);
    t[kInverseDerivLeft].observe(max_abs_diff(dinv, -(Oai.psi_l * Oa.lambda_r)));
    t[kInverseDerivRight].observe(max_abs_diff(dinv, -(Oai.psi_r * Oa.lambda_l)));

    const Vec aib = mul(ai, b), bai = mul(b, ai);
    const RealMatrix dq_left =
        jacobian([&](std::span<const double> x) { return mul(inv(x), b); }, a, cfg);
    const RealMatrix dq_right =
        jacobian([&](std::span<const double> x) { return mul(b, inv(x)); }, a, cfg);
    const BasicOperators Oaib = ops(aib), Obai = ops(bai);
    t[kQuotientLeft].observe(max_abs_diff(dq_left, -(Oaib.psi_l * Oa.lambda_r)));
    t[kQuotientRight].observe(max_abs_diff(dq_right, -(Obai.psi_r * Oa.lambda_l)));

    const RealMatrix dtriple = jacobian(
        [&](std::span<const double> x) { return mul(mul(a, x), c); }, b, cfg);
    t[kTripleLeft].observe(
        max_abs_diff(dtriple, Oabc.psi_l * Oab.lambda_l * Oab.psi_r * Ob.lambda_r));
    t[kTripleRight].observe(
        max_abs_diff(dtriple, Oabc.psi_r * Obc.lambda_r * Obc.psi_l * Ob.lambda_l));

    const Vec aba = mul(ab, ai);
    const BasicOperators Oaba = ops(aba);
    const RealMatrix dconj_a = jacobian(
        [&](std::span<const double> x) { return mul(mul(x, b), inv(x)); }, a, cfg);
    t[kConjugationA].observe(max_abs_diff(dconj_a, (Oaba.psi_l - Oaba.psi_r) * Oa.lambda_l));
    const RealMatrix dconj_b = jacobian(
        [&](std::span<const double> x) { return mul(mul(a, x), ai); }, b, cfg);
    t[kConjugationBLeft].observe(
        max_abs_diff(dconj_b, Oaba.psi_l * Oab.lambda_l * Oab.psi_r * Ob.lambda_r));
    t[kConjugationBRight].observe(
        max_abs_diff(dconj_b, Oaba.psi_r * Obai.lambda_r * Obai.psi_l * Ob.lambda_l));

    const RealMatrix dadj = jacobian(
        [&](std::span<const double> x) { return mul(mul(a, x), ai); }, e, cfg);
    const RealMatrix adj_l = Oa.lambda_l * Oa.psi_r;
    const RealMatrix adj_r = Oai.lambda_r * Oai.psi_l;
    t[kAdjointDerivative].observe(std::max(max_abs_diff(dadj, adj_l), max_abs_diff(dadj, adj_r)));
    t[kAdjointIdentity].observe(max_abs_diff(adj_l, adj_r));

    for (auto &tr : t) tr.count_sample();
  }

  CheckReport r;
  for (int i = 0; i < kShiftCheckCount; ++i)
    r.add(kShiftCheckIds[i], t[i].max(), tol, t[i].samples());
  return r;
}

} // namespace liekit
