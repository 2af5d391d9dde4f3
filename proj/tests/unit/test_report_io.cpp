// Copyright 2026 The tunehorizon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "th/cli/report_io.hpp"

#include <cstring>
#include <random>
#include <sstream>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

namespace th::cli {
namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

TEST_CASE("report JSON has the fixed field order") {
  const auto r = estimate_report(SortedSample({0.2, 0.6}), 0.01);
  const std::string json = render_report_json(r);
  const char* keys[] = {"\"k\":",  "\"s_k\":", "\"alpha\":", "\"epsilon\":", "\"lb\":",
                        "\"ub\":", "\"error_bound\":", "\"confidence\":", "\"best_so_far\":",
                        "\"verdict\":"};
  std::size_t pos = 0;
  for (const char* key : keys) {
    const auto at = json.find(key, pos);
    REQUIRE(at != std::string::npos);
    pos = at;
  }
  CHECK(json.starts_with("{\"k\":2,\"s_k\":0.049999999999999996,"));
  CHECK(json.ends_with("\"verdict\":\"continue\"}"));
}

TEST_CASE("17 significant digits") {
  CHECK(format_g17(0.1) == "0.10000000000000001");
  CHECK(format_g17(0.0) == "0");
  CHECK(JsonObject().number("x", INFINITY).str() == "{\"x\":null}");
  CHECK(JsonObject().string("s", "a\"b").boolean("t", true).str() == "{\"s\":\"a\\\"b\",\"t\":true}");
}

TEST_CASE("rendered reports round-trip bit for bit and reproduce the verdict") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 300; ++rep) {
    std::vector<double> v(2 + gen() % 50);
    for (auto& x : v) x = u(gen) * u(gen);
    const double threshold = u(gen) * 0.05;
    const auto r = estimate_report(SortedSample::from_unsorted(v), threshold);
    const auto back = parse_report_json(render_report_json(r));
    CHECK(back.k == r.k);
    CHECK(same_bits(back.s_k, r.s_k));
    CHECK(same_bits(back.alpha, r.alpha));
    CHECK(same_bits(back.epsilon, r.epsilon));
    CHECK(same_bits(back.lb, r.lb));
    CHECK(same_bits(back.ub, r.ub));
    CHECK(same_bits(back.error_bound, r.error_bound));
    CHECK(same_bits(back.confidence, r.confidence));
    CHECK(same_bits(back.best_so_far, r.best_so_far));
    CHECK(back.verdict == r.verdict);
    CHECK(decide(back.s_k, back.ub, back.best_so_far, threshold) == r.verdict);
  }
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(parse_report_json("[]"), std::runtime_error);
  CHECK_THROWS_AS(parse_report_json("{\"k\":2}"), std::runtime_error);
  auto text = render_report_json(estimate_report(SortedSample({0.2, 0.6}), 0.01));
  text.replace(text.find("continue"), 8, "maybe");
  CHECK_THROWS_AS(parse_report_json(text), std::runtime_error);
}

TEST_CASE("curve CSV uses 12 significant digits") {
  const std::vector<double> run = {0.2, 0.6};
  std::ostringstream out;
  render_curve_csv(out, gain_curve(run));
  CHECK(out.str() == "k,s_k,lb,ub,error_bound,best_so_far\n"
                     "2,0.05,0,0.781084648936,3.53223006755,0.6\n");
}

TEST_CASE("human table flags a vacuous bound") {
  std::ostringstream out;
  render_report_table(out, estimate_report(SortedSample({0.2, 0.6}), 0.01), 0.01);
  CHECK(out.str().find("vacuous") != std::string::npos);
  CHECK(out.str().find("continue") != std::string::npos);
}

}  // namespace
}  // namespace th::cli
