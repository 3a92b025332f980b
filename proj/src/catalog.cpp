#include "liekit/catalog.hpp"

#include "liekit/errors.hpp"

#include <charconv>

namespace liekit {

RealMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  RealMatrix e(n, n);
  e(i, j) = 1.0;
  return e;
}

namespace {

RealMatrix square(std::span<const double> a, std::size_t n) {
  return RealMatrix(n, n, Vec(a.begin(), a.end()));
}

Vec flatten(const RealMatrix &m) { return Vec(m.data().begin(), m.data().end()); }

Tensor3 left_constants(const Tensor3 &I) {
  const std::size_t n = I.dim1();
  Tensor3 c(n, n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t v = 0; v < n; ++v) c(u, t, v) = I(u, v, t) - I(u, t, v);
  return c;
}

RepChart make_rep(std::shared_ptr<const GroupChart> g, std::string name, std::size_t m,
                  MatrixMap f) {
  RepChart r;
  r.group = std::move(g);
  r.name = std::move(name);
  r.m = m;
  r.f = std::move(f);
  return r;
}

// Adds trivial, conjugate, tensor-square and direct-sum around `standard`.
void add_derived_reps(CatalogEntry &e, CatalogRep standard) {
  const std::size_t n = e.chart->dim();
  CatalogRep trivial{make_rep(e.chart, "trivial", 1,
                              [](std::span<const double>) { return RealMatrix::identity(1); }),
                     RepGenerators{std::vector<RealMatrix>(n, RealMatrix(1, 1))}};

  CatalogRep conj{conjugate_rep(standard.rep), negate(*standard.generators)};
  conj.rep.name = "conjugate";

  CatalogRep tsq{tensor_product(standard.rep, standard.rep),
                 tensor_generators(*standard.generators, *standard.generators)};
  tsq.rep.name = "tensor-square";

  CatalogRep dsum{direct_sum(standard.rep, trivial.rep),
                  direct_sum_generators(*standard.generators, *trivial.generators)};
  dsum.rep.name = "direct-sum";

  e.reps.emplace("trivial", std::move(trivial));
  e.reps.emplace("standard", std::move(standard));
  e.reps.emplace("conjugate", std::move(conj));
  e.reps.emplace("tensor-square", std::move(tsq));
  e.reps.emplace("direct-sum", std::move(dsum));
}

CatalogEntry translation(std::size_t n) {
  CatalogEntry e;
  e.name = "translation:" + std::to_string(n);
  e.chart = std::make_shared<GroupChart>(
      e.name, n,
      [n](std::span<const double> a, std::span<const double> b) {
        Vec r(n);
        for (std::size_t k = 0; k < n; ++k) r[k] = a[k] + b[k];
        return r;
      },
      Vec(n, 0.0), std::nullopt, 1.0);
  const MatrixMap one = [n](std::span<const double>) { return RealMatrix::identity(n); };
  e.oracles.psi_l = e.oracles.psi_r = e.oracles.lambda_l = e.oracles.lambda_r = one;
  e.oracles.I = Tensor3(n, n, n);
  e.oracles.C_left = Tensor3(n, n, n);
  e.oracles.inverse = [n](std::span<const double> a) {
    Vec r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = -a[k];
    return r;
  };

  // [[1, a^T], [0, 1]]
  CatalogRep std_rep{make_rep(e.chart, "standard", n + 1,
                              [n](std::span<const double> a) {
                                RealMatrix f = RealMatrix::identity(n + 1);
                                for (std::size_t k = 0; k < n; ++k) f(0, k + 1) = a[k];
                                return f;
                              }),
                     RepGenerators{}};
  std_rep.generators.emplace();
  for (std::size_t k = 0; k < n; ++k) std_rep.generators->I.push_back(matrix_unit(n + 1, 0, k + 1));
  add_derived_reps(e, std::move(std_rep));
  return e;
}

CatalogEntry multiplicative() {
  CatalogEntry e;
  e.name = "multiplicative";
  e.chart = std::make_shared<GroupChart>(
      e.name, 1, [](std::span<const double> a, std::span<const double> b) { return Vec{a[0] * b[0]}; },
      Vec{1.0}, std::nullopt, 0.9);
  const MatrixMap psi = [](std::span<const double> a) { return RealMatrix(1, 1, {a[0]}); };
  const MatrixMap lam = [](std::span<const double> a) { return RealMatrix(1, 1, {1.0 / a[0]}); };
  e.oracles.psi_l = e.oracles.psi_r = psi;
  e.oracles.lambda_l = e.oracles.lambda_r = lam;
  e.oracles.I = Tensor3(1, 1, 1, {1.0});
  e.oracles.C_left = Tensor3(1, 1, 1);
  e.oracles.inverse = [](std::span<const double> a) { return Vec{1.0 / a[0]}; };

  CatalogRep std_rep{make_rep(e.chart, "standard", 1, psi),
                     RepGenerators{{RealMatrix(1, 1, {1.0})}}};
  add_derived_reps(e, std::move(std_rep));
  return e;
}

// x = (a^1, a^2) stands for x -> a^1 x + a^2.
CatalogEntry affine() {
  CatalogEntry e;
  e.name = "affine";
  e.chart = std::make_shared<GroupChart>(
      e.name, 2,
      [](std::span<const double> a, std::span<const double> b) {
        return Vec{a[0] * b[0], a[0] * b[1] + a[1]};
      },
      Vec{1.0, 0.0}, std::nullopt, 0.9);
  e.oracles.psi_l = [](std::span<const double> b) {
    return RealMatrix::from_rows({{b[0], 0.0}, {b[1], 1.0}});
  };
  e.oracles.psi_r = [](std::span<const double> a) {
    return RealMatrix::from_rows({{a[0], 0.0}, {0.0, a[0]}});
  };
  e.oracles.lambda_l = [](std::span<const double> b) {
    return RealMatrix::from_rows({{1.0 / b[0], 0.0}, {-b[1] / b[0], 1.0}});
  };
  e.oracles.lambda_r = [](std::span<const double> a) {
    return RealMatrix::from_rows({{1.0 / a[0], 0.0}, {0.0, 1.0 / a[0]}});
  };
  Tensor3 I(2, 2, 2);
  I(0, 0, 0) = 1.0;
  I(1, 0, 1) = 1.0;
  e.oracles.I = I;
  e.oracles.C_left = left_constants(I);
  e.oracles.inverse = [](std::span<const double> a) {
    return Vec{1.0 / a[0], -a[1] / a[0]};
  };

  // [[a^1, a^2], [0, 1]]
  CatalogRep std_rep{
      make_rep(e.chart, "standard", 2,
               [](std::span<const double> a) {
                 return RealMatrix::from_rows({{a[0], a[1]}, {0.0, 1.0}});
               }),
      RepGenerators{{matrix_unit(2, 0, 0), matrix_unit(2, 0, 1)}}};
  add_derived_reps(e, std::move(std_rep));
  return e;
}

CatalogEntry general_linear(std::size_t n) {
  CatalogEntry e;
  e.name = "gl:" + std::to_string(n);
  const std::size_t d = n * n;
  e.chart = std::make_shared<GroupChart>(
      e.name, d,
      [n](std::span<const double> a, std::span<const double> b) {
        return flatten(square(a, n) * square(b, n));
      },
      flatten(RealMatrix::identity(n)), std::nullopt, 1.0);
  const RealMatrix one = RealMatrix::identity(n);
  e.oracles.psi_r = [n, one](std::span<const double> a) { return kron(square(a, n), one); };
  e.oracles.psi_l = [n, one](std::span<const double> b) {
    return kron(one, square(b, n).transpose());
  };
  e.oracles.lambda_r = [n, one](std::span<const double> a) {
    return kron(invert(square(a, n)), one);
  };
  e.oracles.lambda_l = [n, one](std::span<const double> b) {
    return kron(one, invert(square(b, n)).transpose());
  };
  // d2 (ab)_{kl} / da_{ij} db_{pq} = delta_ki delta_jp delta_lq
  Tensor3 I(d, d, d);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) I(k * n + l, k * n + j, j * n + l) = 1.0;
  e.oracles.I = I;
  e.oracles.C_left = left_constants(I);
  e.oracles.inverse = [n](std::span<const double> a) { return flatten(invert(square(a, n))); };

  CatalogRep std_rep{make_rep(e.chart, "standard", n,
                              [n](std::span<const double> a) { return square(a, n); }),
                     RepGenerators{}};
  std_rep.generators.emplace();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) std_rep.generators->I.push_back(matrix_unit(n, i, j));
  add_derived_reps(e, std::move(std_rep));
  return e;
}

std::optional<std::size_t> suffix_number(const std::string &name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  std::size_t v = 0;
  const char *first = name.data() + prefix.size(), *last = name.data() + name.size();
  const auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last) return std::nullopt;
  return v;
}

} // namespace

CatalogEntry get_group(const std::string &name) {
  if (name == "multiplicative") return multiplicative();
  if (name == "affine") return affine();
  if (auto n = suffix_number(name, "translation:"); n && *n >= 1 && *n <= 9)
    return translation(*n);
  if (auto n = suffix_number(name, "gl:"); n && *n >= 1 && *n <= 3) return general_linear(*n);
  throw UnknownEntry("unknown group '" + name + "'");
}

CatalogRep get_catalog_rep(const std::string &group_name, const std::string &rep_name) {
  CatalogEntry e = get_group(group_name);
  auto it = e.reps.find(rep_name);
  if (it == e.reps.end())
    throw UnknownEntry("unknown representation '" + rep_name + "' for group " + group_name);
  return it->second;
}

RepChart get_rep(const std::string &group_name, const std::string &rep_name) {
  return get_catalog_rep(group_name, rep_name).rep;
}

std::vector<std::string> catalog_group_names() {
  return {"translation:2", "multiplicative", "affine", "gl:2", "gl:3"};
}

std::vector<std::string> catalog_rep_names() {
  return {"trivial", "standard", "conjugate", "tensor-square", "direct-sum"};
}

} // namespace liekit
