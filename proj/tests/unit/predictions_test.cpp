// Copyright 2026 The facloc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>

#include "doctest.h"
#include "facloc/error.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/objectives.hpp"
#include "facloc/predictions.hpp"
#include "support/oracles.hpp"

namespace facloc {
namespace {

Instance fig10() {
  return Instance({0, 0, 0, Rational(9, 10), Rational(19, 10), Rational(19, 10), Rational(19, 10),
                   Rational(19, 10)},
                  3);
}

std::string inst_text(const Instance& inst) {
  std::string s = "z=" + std::to_string(inst.z()) + " x=";
  for (const Rational& v : inst.sorted().values()) s += v.to_string() + " ";
  return s;
}

TEST_CASE("prediction_error examples") {
  PredictionError a = prediction_error(fig10(), 0);
  CHECK(a.value == ExtendedRational(Rational(14, 5)));
  CHECK_FALSE(a.degenerate);
  CHECK(prediction_error(fig10(), Rational(19, 10)).value == ExtendedRational(1));
  PredictionError c = prediction_error(Instance({5, 5, 5}, 1), 7);
  CHECK(c.degenerate);
  CHECK(c.value == ExtendedRational::pos_inf());
  CHECK(prediction_error(Instance({5, 5, 5}, 1), 5).value == ExtendedRational(1));
}

TEST_CASE("delta_index examples") {
  CHECK(delta_index(fig10(), Rational(19, 10)).delta == 0);
  DeltaIndices d = delta_index(fig10(), Rational(9, 10));
  CHECK(d.delta == 2);
  CHECK(d.i_opt == 6);
  CHECK(d.i_mech == 4);
  CHECK(delta_index(Instance({0, 1, 2, 3, 4, 5}, 2), Rational(5, 2)).delta == 0);
  DeltaIndices far = delta_index(fig10(), Rational(1, 2));
    CHECK(far.i_mech == 3);
  CHECK(far.delta == 3);
  CHECK(delta_index(fig10(), 0).delta == 5);
}

TEST_CASE("guarantee formulas") {
  CHECK(f_util(20, 1) == Rational(10, 9));
  CHECK(f_util(8, 3) == Rational(4));
  CHECK(f_util(9, 2) == Rational(4, 3));
  CHECK_THROWS_AS(f_util(6, 3), Error);
  CHECK(f_rand(4, 1) == Rational(3, 2));
  CHECK(f_rand(8, 2) == Rational(3, 2));
  CHECK(f_rand(6, 1) == Rational(5, 4));
  CHECK_THROWS_AS(f_rand(7, 1), Error);
  CHECK(f_robust(10, 3) == Rational(6));
  CHECK(f_robust(9, 3) == Rational(5));
  CHECK(f_robust(3, 1) == Rational(1));
  CHECK_THROWS_AS(f_robust(8, 3), Error);
  CHECK(f_eta(12, 4, Rational(2)) == ExtendedRational(2));
  CHECK(f_eta(9, 3, ExtendedRational::pos_inf()) == ExtendedRational(5));
  CHECK(f_eta(9, 3, Rational(1)) == ExtendedRational(1));
  CHECK(f_delta(8, 3, 0) == ExtendedRational(1));
  CHECK(f_delta(8, 3, 2) == ExtendedRational(4));
  CHECK(f_delta(7, 3, 2) == ExtendedRational::pos_inf());
  CHECK_THROWS_AS(f_delta(9, 3, 1), Error);
  CHECK(delta_c(8, 3) == 1);
  CHECK(delta_r(8, 3) == 2);
  CHECK(gamma_max(20, 6) == 2);
  CHECK(gamma_max(9, 3) == 1);
  CHECK(gamma_max(7, 1) == 0);
}

TEST_CASE("property: prediction error is at least one and exactly one at optima") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 10);
    int z = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    Instance inst(testing::random_profile(rng, n, 8), z);
    OptimalSolution s = opt_utilitarian(inst);
    REQUIRE(prediction_error(inst, s.location).value == ExtendedRational(1));
    Rational y(static_cast<std::int64_t>(rng() % 40) - 10, 4);
    PredictionError e = prediction_error(inst, y);
    REQUIRE(e.value >= ExtendedRational(1));
    bool optimal = eval_cost(inst, y, ObjectiveKind::kUtilitarian).cost == s.cost;
    REQUIRE((e.value == ExtendedRational(1)) == optimal);
  }
}

TEST_CASE("property: bound relations") {
  for (int n = 3; n <= 40; ++n) {
    for (int z = 1; 2 * z + 1 <= n; ++z) {
      if (z > 1) REQUIRE(f_util(n, z) >= f_util(n, z - 1));
      if (n % 2 == 0) REQUIRE(f_rand(n, z) <= f_util(n, z));
      if (n < 3 * z) {
        REQUIRE(delta_c(n, z) <= delta_r(n, z));
        for (int d = 1; d <= z; ++d) REQUIRE(f_delta(n, z, d) >= f_delta(n, z, d - 1));
      } else {
        REQUIRE(f_robust(n, z) >= Rational(1));
      }
      int g = gamma_max(n, z);
      REQUIRE(g >= 0);
      REQUIRE(in_range_left(n, z) <= in_range_right(n, z));
    }
  }
}

// With tied reports i(y) may sit anywhere in a cluster, so the range is stated
// for pairwise distinct reports.
TEST_CASE("property: in_range index distance stays within z on distinct reports") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 2000; ++trial) {
    int z = 1 + static_cast<int>(rng() % 4);
    int n = 2 * z + 1 + static_cast<int>(rng() % 8);
    std::vector<Rational> x;
    for (int v = 0; v < 50; ++v) x.emplace_back(v, 10);
    std::shuffle(x.begin(), x.end(), rng);
    x.resize(static_cast<std::size_t>(n));
    Instance inst(x, z);
    Rational y(static_cast<std::int64_t>(rng() % 70) - 10, 10);
    Rational out = in_range(inst, y, 0);
    DeltaIndices d = delta_index(inst, out);
    REQUIRE(d.delta == std::abs(d.i_opt - d.i_mech));
    INFO(inst_text(inst), " y=", y.to_string(), " out=", out.to_string());
    REQUIRE(d.delta <= ((n - z) % 2 == 1 ? z : z - 1));
  }
}

}  // namespace
}  // namespace facloc
