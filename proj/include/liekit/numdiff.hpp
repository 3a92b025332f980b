#pragma once

// Numeric differentiation and the small dense linear algebra every other
// module is built on: matrices, rank-3 tensors, central-difference
// Jacobians, the mixed second-derivative product stencil, vector-field
// commutators, numeric rank and pivoted inversion.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace liekit {

using Vec = std::vector<double>;
/// Map from a p-vector to a q-vector.
using VecMap = std::function<Vec(std::span<const double>)>;
/// Map from a pair of vectors to a q-vector.
using BiMap = std::function<Vec(std::span<const double>, std::span<const double>)>;

enum class StepMode { Absolute, Relative };

struct DiffConfig {
  StepMode step_mode = StepMode::Relative;
  /// First-derivative step; cbrt(machine epsilon) by default.
  double h = default_step();
  /// Radius of the infinity-ball around the identity used for sampling.
  double sample_radius = 0.2;
  std::size_t sample_count = 20;
  /// Relative singular-value cutoff.
  double rank_tol = 1e-8;
  std::uint64_t rng_seed = 42;

  static double default_step();

  /// Throws InvalidArgument unless h > 0, radius > 0, count >= 1 and
  /// 0 < rank_tol < 1.
  void validate() const;

  /// Step actually used for coordinate value `x`.
  double step_for(double x) const;

  /// Config for second-order stencils and for differentiating a field that
  /// is itself a finite difference. Round-off there scales as eps/h^2, so the
  /// step is raised to h^(3/4) (eps^(1/4) for the default h).
  DiffConfig second_order() const;
};

class RealMatrix {
public:
  RealMatrix() = default;
  /// Zero matrix.
  RealMatrix(std::size_t rows, std::size_t cols);
  /// Row-major data; throws NonFiniteEvaluation on NaN/Inf and
  /// InvalidArgument on a size mismatch.
  RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static RealMatrix identity(std::size_t n);
  static RealMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static RealMatrix diagonal(std::span<const double> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * cols_, cols_);
  }
  Vec column(std::size_t j) const;

  RealMatrix transpose() const;
  /// Largest absolute entry.
  double max_abs() const;
  /// Infinity norm (max absolute row sum).
  double norm_inf() const;

  RealMatrix &operator+=(const RealMatrix &o);
  RealMatrix &operator-=(const RealMatrix &o);
  RealMatrix &operator*=(double s);

  friend RealMatrix operator+(RealMatrix a, const RealMatrix &b) { return a += b; }
  friend RealMatrix operator-(RealMatrix a, const RealMatrix &b) { return a -= b; }
  friend RealMatrix operator*(RealMatrix a, double s) { return a *= s; }
  friend RealMatrix operator*(double s, RealMatrix a) { return a *= s; }
  friend RealMatrix operator-(RealMatrix a) { return a *= -1.0; }
  friend RealMatrix operator*(const RealMatrix &a, const RealMatrix &b);
  friend Vec operator*(const RealMatrix &a, std::span<const double> v);

  bool operator==(const RealMatrix &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Row vector times matrix: (u^T M)^T.
Vec left_multiply(std::span<const double> u, const RealMatrix &m);

/// Kronecker product; (alpha, gamma) maps to alpha * b.rows() + gamma.
RealMatrix kron(const RealMatrix &a, const RealMatrix &b);
RealMatrix block_diag(const RealMatrix &a, const RealMatrix &b);

/// Max |a - b| entry-wise. Sizes must agree.
double max_abs_diff(const RealMatrix &a, const RealMatrix &b);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

/// Rank-3 array indexed [i][j][k], row-major in that order.
class Tensor3 {
public:
  Tensor3() = default;
  Tensor3(std::size_t d1, std::size_t d2, std::size_t d3);
  Tensor3(std::size_t d1, std::size_t d2, std::size_t d3, std::vector<double> data);

  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }
  std::size_t dim3() const { return d3_; }

  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d2_ + j) * d3_ + k];
  }
  double &operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d2_ + j) * d3_ + k];
  }
  std::span<const double> data() const { return data_; }

  double max_abs() const;
  Tensor3 operator-() const;
  bool operator==(const Tensor3 &) const = default;

private:
  std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<double> data_;
};

double max_abs_diff(const Tensor3 &a, const Tensor3 &b);

/// Throws NonFiniteEvaluation if any value is NaN or infinite.
void require_finite(std::span<const double> values, std::string_view what);

/// Central-difference Jacobian J(q x p), J[i][j] ~ df^i/dx^j, O(h^2).
RealMatrix jacobian(const VecMap &f, std::span<const double> at, const DiffConfig &cfg);

/// T[K][L][M] ~ d2 f^K / d(first)^L d(second)^M via the four-point product
/// stencil at (a, b). Uses cfg.second_order() steps.
Tensor3 mixed_second(const BiMap &f, std::span<const double> a, std::span<const double> b,
                     const DiffConfig &cfg);

/// Poisson bracket of two vector fields at a point:
/// (X_a xi_b^j - X_b xi_a^j).
Vec vf_commutator(const VecMap &xi_a, const VecMap &xi_b, std::span<const double> at,
                  const DiffConfig &cfg);

/// Number of singular values above rank_tol * sigma_max (0 for a zero matrix).
std::size_t numeric_rank(const RealMatrix &m, double rank_tol);

/// Gauss-Jordan inversion with row pivoting. Throws SingularMatrix when a
/// pivot falls below rank_tol * ||M||_inf.
RealMatrix invert(const RealMatrix &m, double rank_tol = 1e-8);

/// Deterministic sample stream. Each named check derives its own stream from
/// (seed, name) so results do not depend on evaluation order.
class Sampler {
public:
  Sampler(std::uint64_t seed, std::string_view stream);

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform in the infinity-ball of `radius` around `center`.
  Vec in_ball(std::span<const double> center, double radius);

private:
  std::mt19937_64 engine_;
};

} // namespace liekit
