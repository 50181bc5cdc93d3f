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
#include <string>

#include "doctest.h"
#include "facloc/predictions.hpp"
#include "facloc/reproduce.hpp"
#include "facloc/sweep.hpp"

namespace facloc {
namespace {

bool same_rows(const SweepReport& a, const SweepReport& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (sweep_csv_row(a.rows[i]) != sweep_csv_row(b.rows[i])) return false;
  }
  return true;
}

TEST_CASE("sweep is independent of the worker count") {
  SweepConfig c;
  c.mechanism = mech::InRange{1};
  c.n = 11;
  c.z = 3;
  c.prediction = PredictionMode::kUniform;
  c.count = 300;
  c.keep_rows = true;
  c.check_sp = true;
  SweepReport one = sweep(c);
  c.workers = 3;
  SweepReport three = sweep(c);
  CHECK(same_rows(one, three));
  CHECK(one.max_ratio == three.max_ratio);
  CHECK(one.argmax_index == three.argmax_index);
  CHECK(one.sp_violations == 0);
  CHECK(one.all_within);
  CHECK(sweep_instance(c, 17).locations() == sweep_instance(c, 17).locations());
}

TEST_CASE("sweep examples") {
  SweepConfig a;
  a.mechanism = mech::LeftMedian{};
  a.n = 8;
  a.z = 3;
  a.count = 2000;
  SweepReport ra = sweep(a);
  CHECK(ra.max_ratio <= ExtendedRational(4));
  CHECK(ra.all_within);

  SweepConfig b;
  b.mechanism = mech::LeftZ{};
  b.objective = ObjectiveKind::kEgalitarian;
  b.n = 7;
  b.z = 3;
  b.count = 2000;
  CHECK(sweep(b).max_ratio <= ExtendedRational(2));

  SweepConfig c;
  c.mechanism = mech::InRange{0};
  c.n = 9;
  c.z = 3;
  c.prediction = PredictionMode::kPerfect;
  c.count = 2000;
  CHECK(sweep(c).max_ratio == ExtendedRational(1));
}

TEST_CASE("family sweeps cover fixtures") {
  SweepConfig c;
  c.mechanism = mech::LeftMedian{};
  c.family = Family::kFig6;
  c.family_params = FamilyParams{.n = 8, .z = 3, .variant = 2};
  c.count = 3;
  SweepReport r = sweep(c);
  CHECK(r.max_ratio == ExtendedRational(4));
}

TEST_CASE("csv format") {
  CHECK(sweep_csv_header() == "seed,n,z,family,mechanism,objective,mech_cost,opt_cost,ratio,bound,within_bound");
  SweepConfig c;
  c.count = 2;
  c.keep_rows = true;
  SweepReport r = sweep(c);
  REQUIRE(r.rows.size() == 2);
  std::string row = sweep_csv_row(r.rows[0]);
  CHECK(std::count(row.begin(), row.end(), ',') == 10);
}

TEST_CASE("reproduce targets") {
  WorkedExample w = reproduce_worked_example();
  CHECK(w.opt_cost == Rational(1));
  CHECK(w.prediction_cost == Rational(14, 5));
  CHECK(w.mechanism_cost == Rational(37, 10));
  ReproduceOutput ex = reproduce("example-5-2-2", 0, 1, 1, -1);
  CHECK(ex.ok);
  CHECK(ex.text.find("37/10") != std::string::npos);

  auto rows = reproduce_figure1(50, 1, 1);
  bool saw = false;
  for (const FrontierRow& r : rows) {
    CHECK(r.match);
    if (r.n == 20 && r.z == 9) {
      saw = true;
      CHECK(r.f == Rational(10));
    }
  }
  CHECK(saw);

  auto table = reproduce_table1({5, 6});
  bool egal = false;
  for (const BoundsRow& r : table) {
    if (r.objective == "egalitarian") {
      egal = true;
      CHECK(r.det_upper == "2");
      CHECK(r.det_lower == "2");
    }
  }
  CHECK(egal);
  CHECK(reproduce("table1", 0, 1, 1, -1).ok);
  CHECK_THROWS(reproduce("figure99", 0, 1, 1, -1));
}

}  // namespace
}  // namespace facloc
