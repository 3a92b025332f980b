#include "liekit/report.hpp"

#include "liekit/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace liekit {

const CheckRecord &CheckReport::add(std::string id, double max_residual, double tolerance,
                                    std::size_t samples) {
  CheckRecord r;
  r.id = std::move(id);
  r.max_residual = max_residual;
  r.tolerance = tolerance;
  r.samples = samples;
  r.pass = max_residual <= tolerance; // false for NaN
  checks.push_back(std::move(r));
  return checks.back();
}

void CheckReport::append(const CheckReport &other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool CheckReport::all_pass() const {
  for (const auto &c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckRecord *CheckReport::find(const std::string &id) const {
  for (const auto &c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

const CheckRecord &CheckReport::at(const std::string &id) const {
  if (const CheckRecord *c = find(id)) return *c;
  throw UnknownEntry("no check named " + id);
}

void ResidualTracker::observe(double residual) {
  const double r = std::fabs(residual);
  if (std::isnan(max_)) return;
  if (std::isnan(r) || r > max_) max_ = r;
}

namespace {

std::string real(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
    case '"': out += "\\\""; break;
    case '\\': out += "\\\\"; break;
    case '\n': out += "\\n"; break;
    default: out += c;
    }
  }
  return out + "\"";
}

} // namespace

std::string to_json(const CheckReport &r) {
  std::ostringstream o;
  o << "{\n";
  o << "  \"suite\": " << quote(r.suite) << ",\n";
  o << "  \"group\": " << quote(r.group) << ",\n";
  o << "  \"rep\": " << (r.rep ? quote(*r.rep) : std::string("null")) << ",\n";
  o << "  \"seed\": " << r.seed << ",\n";
  o << "  \"fd_step\": " << real(r.fd_step) << ",\n";
  o << "  \"tol\": {";
  for (std::size_t i = 0; i < r.checks.size(); ++i)
    o << (i ? ",\n    " : "\n    ") << quote(r.checks[i].id) << ": "
      << real(r.checks[i].tolerance);
  o << (r.checks.empty() ? "},\n" : "\n  },\n");
  o << "  \"checks\": [";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const auto &c = r.checks[i];
    o << (i ? ",\n    " : "\n    ") << "{\"id\": " << quote(c.id)
      << ", \"max_residual\": " << real(c.max_residual) << ", \"samples\": " << c.samples
      << ", \"pass\": " << (c.pass ? "true" : "false") << "}";
  }
  o << (r.checks.empty() ? "],\n" : "\n  ],\n");
  o << "  \"wall_time_ms\": " << real(r.wall_time_ms) << "\n";
  o << "}\n";
  return o.str();
}

std::string to_table(const CheckReport &r) {
  std::ostringstream o;
  char line[256];
  std::snprintf(line, sizeof line, "%-36s %14s %10s %8s  %s\n", "check", "max_residual",
                "tolerance", "samples", "result");
  o << line;
  for (const auto &c : r.checks) {
    std::snprintf(line, sizeof line, "%-36s %14.3e %10.1e %8zu  %s\n", c.id.c_str(),
                  c.max_residual, c.tolerance, c.samples, c.pass ? "PASS" : "FAIL");
    o << line;
  }
  return o.str();
}

} // namespace liekit
