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

#ifndef FACLOC_VERIFICATION_HPP_
#define FACLOC_VERIFICATION_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "facloc/extended.hpp"
#include "facloc/instance.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/rational.hpp"

namespace facloc {

struct ViolationCertificate {
  int agent_index = 0;  // 0-based position in the input profile
  Rational true_point;
  Rational deviation;
  ExtendedRational outcome_truthful;  // expected location for randomized rules
  ExtendedRational outcome_deviated;
  ExtendedRational cost_truthful;
  ExtendedRational cost_deviated;
};

struct RatioReport {
  ExtendedRational mechanism_cost;
  Rational opt_cost;
  ExtendedRational ratio;
  std::optional<ExtendedRational> bound;
  bool within_bound = true;
};

// Deviations per agent. Empty means the default grid; a single row is shared
// by every agent; otherwise one row per agent.
using DeviationSet = std::vector<std::vector<Rational>>;

// Any rule mapping a profile to a finite-support distribution. Used for rules
// outside MechanismSpec, e.g. deliberately broken mixtures.
using Rule = std::function<RandomizedOutcome(const Instance&)>;

// Reports, adjacent midpoints, the outcome and outcome +- diameter, points
// beyond both extremes, eight interior points per gap, the prediction and any
// finite phantom points; sorted and deduplicated.
std::vector<Rational> default_deviation_grid(const Instance& instance, const MechanismSpec& spec);
std::vector<Rational> default_deviation_grid(const Instance& instance,
                                             const std::vector<ExtendedRational>& outcomes);

std::optional<ViolationCertificate> check_sp_deterministic(const MechanismSpec& spec,
                                                           const Instance& truth,
                                                           const DeviationSet& deviations = {});
std::optional<ViolationCertificate> check_sp_in_expectation(const MechanismSpec& spec,
                                                            const Instance& truth,
                                                            const DeviationSet& deviations = {});
std::optional<ViolationCertificate> check_sp_rule(const Rule& rule, const Instance& truth,
                                                  const DeviationSet& deviations = {});

// Moves the agent toward the truthful outcome in `steps` equal increments and
// checks the outcome never changes.
bool check_corollary_path(const MechanismSpec& spec, const Instance& instance, int agent_index,
                          int steps);

// The guarantee the literature attaches to (mechanism, objective) at this
// instance, if any.
std::optional<ExtendedRational> applicable_bound(const MechanismSpec& spec, const Instance& instance,
                                                 ObjectiveKind objective,
                                                 const RandomizedOutcome& outcome);

RatioReport measure_ratio(const MechanismSpec& spec, const Instance& instance,
                          ObjectiveKind objective);
RatioReport measure_ratio(const RandomizedOutcome& outcome, const Instance& instance,
                          ObjectiveKind objective);

// One step of a deviation sequence: the profile after `mover` changed report.
struct ReplayStep {
  Instance instance;
  int mover = -1;  // -1 for the starting profile
};

struct ReplayResult {
  bool applicable = true;  // every move stayed within [old report, outcome]
  bool unchanged = true;   // outcome identical at every step
  std::vector<ExtendedRational> outcomes;
  int first_change = -1;
};

ReplayResult replay_sequence(const MechanismSpec& spec, const std::vector<ReplayStep>& steps);

}  // namespace facloc

#endif  // FACLOC_VERIFICATION_HPP_
