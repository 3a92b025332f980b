#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liekit {

struct CheckRecord {
  std::string id;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  bool pass = false;
};

/// Named residual records from one or more checks, plus the run metadata
/// the CLI writes into its report file.
struct CheckReport {
  std::string suite;
  std::string group;
  std::optional<std::string> rep;
  std::uint64_t seed = 0;
  double fd_step = 0.0;
  std::vector<CheckRecord> checks;
  double wall_time_ms = 0.0;

  /// Appends a record; pass is max_residual <= tolerance (NaN fails).
  const CheckRecord &add(std::string id, double max_residual, double tolerance,
                         std::size_t samples);
  void append(const CheckReport &other);

  bool all_pass() const;
  const CheckRecord *find(const std::string &id) const;
  /// Throws UnknownEntry when `id` is absent.
  const CheckRecord &at(const std::string &id) const;
};

/// Accumulates max |residual| over samples for a single check.
class ResidualTracker {
public:
  void observe(double residual);
  double max() const { return max_; }
  std::size_t samples() const { return samples_; }
  void count_sample() { ++samples_; }

private:
  double max_ = 0.0;
  std::size_t samples_ = 0;
};

/// JSON document with keys in fixed order and reals at 17 significant
/// digits. Byte-stable for a fixed report.
std::string to_json(const CheckReport &report);

/// Fixed-width human-readable table.
std::string to_table(const CheckReport &report);

} // namespace liekit
