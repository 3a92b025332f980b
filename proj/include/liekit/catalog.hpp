#pragma once

// Built-in groups and representations with closed-form oracles.
//
// Groups: "translation:n" (n = 1..9), "multiplicative", "affine",
// "gl:n" (n = 1..3, matrices flattened row-major, K = k n + l).
// Representations: "trivial" on every group, "standard" on every group,
// "conjugate" (inverse of standard, right-side), "tensor-square"
// (standard (x) standard) and "direct-sum" (standard (+) trivial).

#include "liekit/representations.hpp"

#include <map>
#include <memory>
#include <optional>

namespace liekit {

struct GroupOracles {
  std::optional<MatrixMap> psi_l, psi_r, lambda_l, lambda_r;
  std::optional<Tensor3> I;      // [K][L][M]
  std::optional<Tensor3> C_left; // [U][T][V]
  std::optional<VecMap> inverse;

  const std::optional<MatrixMap> &psi(Flavor f) const {
    return f == Flavor::Left ? psi_l : psi_r;
  }
  const std::optional<MatrixMap> &lambda(Flavor f) const {
    return f == Flavor::Left ? lambda_l : lambda_r;
  }
};

struct CatalogRep {
  RepChart rep;
  std::optional<RepGenerators> generators;
};

struct CatalogEntry {
  std::string name;
  std::shared_ptr<const GroupChart> chart;
  GroupOracles oracles;
  std::map<std::string, CatalogRep> reps;
};

/// Throws UnknownEntry for names outside the vocabulary above.
CatalogEntry get_group(const std::string &name);

/// Throws UnknownEntry for an unknown group or representation name.
CatalogRep get_catalog_rep(const std::string &group_name, const std::string &rep_name);
RepChart get_rep(const std::string &group_name, const std::string &rep_name);

/// Names used by the test and CLI sweeps.
std::vector<std::string> catalog_group_names();
std::vector<std::string> catalog_rep_names();

/// Matrix unit E_{ij} of size n.
RealMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);

} // namespace liekit
