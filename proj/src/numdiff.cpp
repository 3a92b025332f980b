#include "liekit/numdiff.hpp"

#include "liekit/errors.hpp"
#include "liekit/kernels.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace liekit {

double DiffConfig::default_step() {
  return std::cbrt(std::numeric_limits<double>::epsilon());
}

void DiffConfig::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("DiffConfig: h must be > 0");
  if (!(sample_radius > 0.0)) throw InvalidArgument("DiffConfig: sample_radius must be > 0");
  if (sample_count < 1) throw InvalidArgument("DiffConfig: sample_count must be >= 1");
  if (!(rank_tol > 0.0 && rank_tol < 1.0))
    throw InvalidArgument("DiffConfig: rank_tol must lie in (0, 1)");
}

double DiffConfig::step_for(double x) const {
  if (step_mode == StepMode::Absolute) return h;
  return h * std::max(1.0, std::fabs(x));
}

DiffConfig DiffConfig::second_order() const {
  DiffConfig c = *this;
  c.h = std::pow(h, 0.75);
  return c;
}

// ---------------------------------------------------------------- matrices

void require_finite(std::span<const double> values, std::string_view what) {
  for (double v : values)
    if (!std::isfinite(v)) throw NonFiniteEvaluation("non-finite value in " + std::string(what));
}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw InvalidArgument("RealMatrix: data size mismatch");
  require_finite(data_, "RealMatrix");
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<double> data;
  data.reserve(r * c);
  for (const auto &row : rows) {
    if (row.size() != c) throw InvalidArgument("RealMatrix::from_rows: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return RealMatrix(r, c, std::move(data));
}

RealMatrix RealMatrix::diagonal(std::span<const double> d) {
  RealMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vec RealMatrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double RealMatrix::max_abs() const { return kernels::max_abs(data_); }

double RealMatrix::norm_inf() const {
  double n = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (double v : row(i)) s += std::fabs(v);
    n = std::max(n, s);
  }
  return n;
}

RealMatrix &RealMatrix::operator+=(const RealMatrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix add: shape mismatch");
  kernels::axpy(1.0, o.data_, data_);
  return *this;
}

RealMatrix &RealMatrix::operator-=(const RealMatrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix sub: shape mismatch");
  kernels::axpy(-1.0, o.data_, data_);
  return *this;
}

RealMatrix &RealMatrix::operator*=(double s) {
  for (double &v : data_) v *= s;
  return *this;
}

RealMatrix operator*(const RealMatrix &a, const RealMatrix &b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: shape mismatch");
  RealMatrix c(a.rows_, b.cols_);
  kernels::active().matmul(a.data_.data(), b.data_.data(), c.data_.data(), a.rows_, a.cols_,
                           b.cols_);
  return c;
}

Vec operator*(const RealMatrix &a, std::span<const double> v) {
  if (a.cols_ != v.size()) throw InvalidArgument("matrix-vector: shape mismatch");
  Vec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) out[i] = kernels::dot(a.row(i), v);
  return out;
}

Vec left_multiply(std::span<const double> u, const RealMatrix &m) {
  if (u.size() != m.rows()) throw InvalidArgument("vector-matrix: shape mismatch");
  Vec out(m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) kernels::axpy(u[i], m.row(i), out);
  return out;
}

RealMatrix kron(const RealMatrix &a, const RealMatrix &b) {
  RealMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

RealMatrix block_diag(const RealMatrix &a, const RealMatrix &b) {
  RealMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgument("max_abs_diff: size mismatch");
  return kernels::max_abs_diff(a, b);
}

double max_abs_diff(const RealMatrix &a, const RealMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidArgument("max_abs_diff: shape mismatch");
  return kernels::max_abs_diff(a.data(), b.data());
}

// ----------------------------------------------------------------- tensors

Tensor3::Tensor3(std::size_t d1, std::size_t d2, std::size_t d3)
    : d1_(d1), d2_(d2), d3_(d3), data_(d1 * d2 * d3, 0.0) {}

Tensor3::Tensor3(std::size_t d1, std::size_t d2, std::size_t d3, std::vector<double> data)
    : d1_(d1), d2_(d2), d3_(d3), data_(std::move(data)) {
  if (data_.size() != d1 * d2 * d3) throw InvalidArgument("Tensor3: data size mismatch");
  require_finite(data_, "Tensor3");
}

double Tensor3::max_abs() const { return kernels::max_abs(data_); }

Tensor3 Tensor3::operator-() const {
  Tensor3 t = *this;
  for (double &v : t.data_) v = -v;
  return t;
}

double max_abs_diff(const Tensor3 &a, const Tensor3 &b) {
  if (a.dim1() != b.dim1() || a.dim2() != b.dim2() || a.dim3() != b.dim3())
    throw InvalidArgument("max_abs_diff: tensor shape mismatch");
  return kernels::max_abs_diff(a.data(), b.data());
}

// ---------------------------------------------------------- differentiation

namespace {

Vec eval_checked(const VecMap &f, std::span<const double> x) {
  Vec y = f(x);
  require_finite(y, "function evaluation");
  return y;
}

Vec eval_checked(const BiMap &f, std::span<const double> a, std::span<const double> b) {
  Vec y = f(a, b);
  require_finite(y, "function evaluation");
  return y;
}

} // namespace

RealMatrix jacobian(const VecMap &f, std::span<const double> at, const DiffConfig &cfg) {
  const std::size_t p = at.size();
  Vec x(at.begin(), at.end());
  std::size_t q = 0;
  RealMatrix jt; // transposed: row j holds column j of the Jacobian
  for (std::size_t j = 0; j < p; ++j) {
    const double x0 = at[j];
    const double step = cfg.step_for(x0);
    x[j] = x0 + step;
    const double xp = x[j];
    Vec fp = eval_checked(f, x);
    x[j] = x0 - step;
    const double xm = x[j];
    Vec fm = eval_checked(f, x);
    x[j] = x0;
    if (j == 0) {
      q = fp.size();
      jt = RealMatrix(p, q);
    }
    if (fp.size() != q || fm.size() != q) throw InvalidArgument("jacobian: output size varies");
    // Divide by the representable step, not the nominal one.
    kernels::scaled_diff(fp, fm, 1.0 / (xp - xm),
                         std::span<double>(jt.data().data() + j * q, q));
  }
  if (p == 0) return RealMatrix(eval_checked(f, at).size(), 0);
  return jt.transpose();
}

Tensor3 mixed_second(const BiMap &f, std::span<const double> a, std::span<const double> b,
                     const DiffConfig &cfg) {
  const DiffConfig c2 = cfg.second_order();
  const std::size_t pa = a.size(), pb = b.size();
  Vec x(a.begin(), a.end()), y(b.begin(), b.end());
  Tensor3 t;
  std::size_t q = 0;
  bool sized = false;
  for (std::size_t l = 0; l < pa; ++l) {
    const double hl = c2.step_for(a[l]);
    const double ap = a[l] + hl, am = a[l] - hl;
    for (std::size_t m = 0; m < pb; ++m) {
      const double hm = c2.step_for(b[m]);
      const double bp = b[m] + hm, bm = b[m] - hm;
      x[l] = ap;
      y[m] = bp;
      Vec fpp = eval_checked(f, x, y);
      y[m] = bm;
      Vec fpm = eval_checked(f, x, y);
      x[l] = am;
      Vec fmm = eval_checked(f, x, y);
      y[m] = bp;
      Vec fmp = eval_checked(f, x, y);
      x[l] = a[l];
      y[m] = b[m];
      if (!sized) {
        q = fpp.size();
        t = Tensor3(q, pa, pb);
        sized = true;
      }
      const double denom = (ap - am) * (bp - bm);
      for (std::size_t k = 0; k < q; ++k)
        t(k, l, m) = ((fpp[k] - fpm[k]) - (fmp[k] - fmm[k])) / denom;
    }
  }
  if (!sized) return Tensor3(eval_checked(f, a, b).size(), pa, pb);
  return t;
}

Vec vf_commutator(const VecMap &xi_a, const VecMap &xi_b, std::span<const double> at,
                  const DiffConfig &cfg) {
  Vec va = eval_checked(xi_a, at);
  Vec vb = eval_checked(xi_b, at);
  if (va.size() != at.size() || vb.size() != at.size())
    throw InvalidArgument("vf_commutator: fields must be tangent (size n)");
  RealMatrix ja = jacobian(xi_a, at, cfg);
  RealMatrix jb = jacobian(xi_b, at, cfg);
  Vec out = jb * va;
  kernels::axpy(-1.0, ja * vb, out);
  return out;
}

std::size_t numeric_rank(const RealMatrix &m, double rank_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
  const auto &s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = rank_tol * s(0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) ++r;
  return r;
}

RealMatrix invert(const RealMatrix &m, double rank_tol) {
  if (!m.square()) throw InvalidArgument("invert: matrix is not square");
  const std::size_t n = m.rows();
  const double scale = m.norm_inf();
  if (scale == 0.0 && n > 0) throw SingularMatrix("invert: zero matrix");
  RealMatrix a = m;
  RealMatrix inv = RealMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
    if (std::fabs(a(piv, col)) < rank_tol * scale)
      throw SingularMatrix("invert: pivot below tolerance");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const double d = 1.0 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= d;
      inv(col, j) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a(r, col);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------- sampling

namespace {

// FNV-1a; std::hash is not stable across standard libraries.
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace

Sampler::Sampler(std::uint64_t seed, std::string_view stream)
    : engine_(seed * 0x9E3779B97F4A7C15ULL ^ fnv1a(stream)) {}

double Sampler::uniform(double lo, double hi) {
  // 53 random mantissa bits; std::uniform_real_distribution is not portable.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Vec Sampler::in_ball(std::span<const double> center, double radius) {
  Vec p(center.begin(), center.end());
  for (double &v : p) v += uniform(-radius, radius);
  return p;
}

} // namespace liekit
