#pragma once

// Named check suites over catalog entries, shared by the CLI and the
// acceptance driver.

#include "liekit/catalog.hpp"
#include "liekit/flows.hpp"
#include "liekit/pde.hpp"

namespace liekit {

struct SuiteOptions {
  std::string suite = "all";
  std::string group;
  /// Without a rep the rep suite runs every catalog rep and prefixes
  /// record ids with "<rep>/".
  std::optional<std::string> rep;
  DiffConfig cfg;
  /// Multiplies every tolerance.
  double tol_scale = 1.0;
};

/// "shift", "structure", "flows", "rep", "pde", "all".
const std::vector<std::string> &suite_names();

/// Throws UnknownEntry for an unknown suite, group or rep.
CheckReport run_suite(const SuiteOptions &opt);

CheckReport shift_suite(const CatalogEntry &e, const DiffConfig &cfg);
CheckReport structure_suite(const CatalogEntry &e, const DiffConfig &cfg);
CheckReport flows_suite(const CatalogEntry &e, const DiffConfig &cfg);
CheckReport rep_suite(const CatalogEntry &e, const CatalogRep &rep, const DiffConfig &cfg);
CheckReport pde_suite(const CatalogEntry &e, const DiffConfig &cfg);

/// Numeric psi/lambda against the closed forms at sampled points, and the
/// Newton inverse against the inverse oracle. Records "oracle_<operator>"
/// and "oracle_inverse"; absent oracles are skipped.
CheckReport operator_oracle_check(const CatalogEntry &e, const DiffConfig &cfg,
                                  double tol = 1e-5, double inverse_tol = 1e-8);

} // namespace liekit
