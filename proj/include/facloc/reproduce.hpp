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

#ifndef FACLOC_REPRODUCE_HPP_
#define FACLOC_REPRODUCE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "facloc/extended.hpp"
#include "facloc/rational.hpp"

namespace facloc {

struct FrontierRow {
  int n = 0;
  int z = 0;
  Rational f;                   // n/(n-2z)
  ExtendedRational attained;    // left_median ratio on the fig6 x^2 profile, d = 1
  ExtendedRational sweep_max;   // worst ratio over random uniform instances
  bool match = false;           // attained == f and sweep_max <= f
};

// n in {8, 12, 16, 20}, every feasible z.
std::vector<FrontierRow> reproduce_figure1(std::int64_t sweep_count, std::uint64_t seed, int workers);

struct BoundsRow {
  std::string objective;
  int n = 0;
  int z = 0;
  std::string det_upper;
  std::string det_lower;
  std::string rand_upper;  // "-" where no bound is stated
  std::string rand_lower;
};

std::vector<BoundsRow> reproduce_table1(const std::vector<int>& ns);

struct WorkedExample {
  Rational opt_cost;         // 1
  Rational prediction_cost;  // 14/5
  Rational mechanism_cost;   // 37/10
  Rational mechanism_location;
  ExtendedRational eta;
};

WorkedExample reproduce_worked_example();

struct ReproduceOutput {
  std::string text;
  bool ok = true;
};

// target: "figure1", "table1" or "example-5-2-2". digits < 0 prints exact rationals.
ReproduceOutput reproduce(std::string_view target, std::int64_t sweep_count, std::uint64_t seed,
                          int workers, int digits);

}  // namespace facloc

#endif  // FACLOC_REPRODUCE_HPP_
