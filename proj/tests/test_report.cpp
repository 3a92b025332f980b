#include "liekit/report.hpp"

#include "liekit/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace liekit;

TEST_CASE("pass is residual <= tolerance and NaN fails") {
  CheckReport r;
  CHECK(r.add("a", 1e-4, 1e-4, 3).pass);
  CHECK_FALSE(r.add("b", 2e-4, 1e-4, 3).pass);
  CHECK_FALSE(r.add("c", std::numeric_limits<double>::quiet_NaN(), 1.0, 1).pass);
  CHECK_FALSE(r.all_pass());
  CHECK(r.at("a").samples == 3);
  CHECK(r.find("zzz") == nullptr);
  CHECK_THROWS_AS(r.at("zzz"), UnknownEntry);
}

TEST_CASE("residual tracker keeps the max magnitude and sticks on NaN") {
  ResidualTracker t;
  t.observe(-3.0);
  t.observe(2.0);
  CHECK(t.max() == 3.0);
  t.observe(std::nan(""));
  t.observe(5.0);
  CHECK(std::isnan(t.max()));
}

TEST_CASE("json layout is fixed") {
  CheckReport r;
  r.suite = "structure";
  r.group = "gl:2";
  r.seed = 7;
  r.fd_step = 0.1;
  r.add("maurer_left", 1.0 / 3.0, 1e-3, 20);
  const std::string expect = "{\n"
                             "  \"suite\": \"structure\",\n"
                             "  \"group\": \"gl:2\",\n"
                             "  \"rep\": null,\n"
                             "  \"seed\": 7,\n"
                             "  \"fd_step\": 0.10000000000000001,\n"
                             "  \"tol\": {\n"
                             "    \"maurer_left\": 0.001\n"
                             "  },\n"
                             "  \"checks\": [\n"
                             "    {\"id\": \"maurer_left\", \"max_residual\": "
                             "0.33333333333333331, \"samples\": 20, \"pass\": false}\n"
                             "  ],\n"
                             "  \"wall_time_ms\": 0\n"
                             "}\n";
  CHECK(to_json(r) == expect);
}

TEST_CASE("json writes non-finite residuals as strings") {
  CheckReport r;
  r.add("x", std::numeric_limits<double>::infinity(), 1.0, 1);
  const std::string j = to_json(r);
  CHECK(j.find("\"max_residual\": \"inf\"") != std::string::npos);
}

TEST_CASE("table lists every check") {
  CheckReport r;
  r.add("first", 0.0, 1.0, 1);
  r.add("second", 2.0, 1.0, 1);
  const std::string t = to_table(r);
  CHECK(t.find("first") != std::string::npos);
  CHECK(t.find("FAIL") != std::string::npos);
}
