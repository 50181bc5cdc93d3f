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

#ifndef FACLOC_SWEEP_HPP_
#define FACLOC_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facloc/extended.hpp"
#include "facloc/families.hpp"
#include "facloc/instance.hpp"
#include "facloc/mechanisms.hpp"

namespace facloc {

struct SweepConfig {
  MechanismSpec mechanism = mech::LeftMedian{};
  ObjectiveKind objective = ObjectiveKind::kUtilitarian;
  // Random source; ignored when `family` is set.
  int n = 8;
  int z = 1;
  RandomModel model = RandomModel::kUniform;
  std::optional<Family> family;
  FamilyParams family_params;
  PredictionMode prediction = PredictionMode::kNone;
  std::uint64_t seed = 1;
  std::int64_t count = 1000;
  int workers = 1;
  bool keep_rows = false;
  // Also audit strategyproofness of every instance on the default grid.
  bool check_sp = false;
};

struct SweepRow {
  std::int64_t index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int z = 0;
  std::string family;
  std::string mechanism;
  std::string objective;
  ExtendedRational mech_cost;
  Rational opt_cost;
  ExtendedRational ratio;
  std::optional<ExtendedRational> bound;
  bool within_bound = true;
};

struct SweepReport {
  std::int64_t count = 0;
  ExtendedRational max_ratio = ExtendedRational(0);
  std::int64_t argmax_index = -1;
  std::optional<Instance> argmax_instance;
  // Smallest bound seen across instances; bounds may vary per instance.
  std::optional<ExtendedRational> min_bound;
  std::int64_t out_of_bound = 0;
  std::int64_t sp_violations = 0;
  bool all_within = true;
  std::vector<SweepRow> rows;
};

// The index-th instance of the sweep, prediction included.
Instance sweep_instance(const SweepConfig& config, std::int64_t index);

// Bit-identical for any worker count.
SweepReport sweep(const SweepConfig& config);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row, int decimal_digits = -1);

}  // namespace facloc

#endif  // FACLOC_SWEEP_HPP_
