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

#ifndef FACLOC_MECHANISMS_HPP_
#define FACLOC_MECHANISMS_HPP_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "facloc/extended.hpp"
#include "facloc/instance.hpp"
#include "facloc/rational.hpp"

namespace facloc {

namespace mech {
struct LeftZ {};
struct LeftMedian {};
struct Kth {
  int k = 1;
};
struct Phantom {
  std::vector<ExtendedRational> alphas;
};
struct RandMedian {};
struct InRange {
  int gamma = 0;
};
struct Oracle {
  ObjectiveKind objective = ObjectiveKind::kUtilitarian;
};
}  // namespace mech

using MechanismSpec = std::variant<mech::LeftZ, mech::LeftMedian, mech::Kth, mech::Phantom,
                                   mech::RandMedian, mech::InRange, mech::Oracle>;

struct Atom {
  ExtendedRational location;
  Rational probability;
};

// Finite-support distribution over facility locations, sorted by location.
struct RandomizedOutcome {
  std::vector<Atom> support;

  bool is_deterministic() const { return support.size() == 1; }
  // Location of a one-atom outcome.
  const ExtendedRational& point() const;
  // E|Y - p|.
  ExtendedRational expected_distance(const Rational& p) const;
};

RandomizedOutcome deterministic_outcome(ExtendedRational location);

const Rational& left_z(const Instance& instance);
const Rational& left_median(const Instance& instance);
const Rational& kth_order_statistic(const Instance& instance, int k);
ExtendedRational phantom_median(const Instance& instance, std::span<const ExtendedRational> alphas);
RandomizedOutcome rand_median(const Instance& instance);
Rational in_range(const Instance& instance, const Rational& prediction, int gamma);
Rational oracle_mechanism(const Instance& instance, ObjectiveKind objective);

// Evaluates a mechanism on an ascending profile. All mechanisms here are
// anonymous, so the sorted values carry everything they need.
RandomizedOutcome evaluate_sorted(const MechanismSpec& spec, std::span<const Rational> sorted,
                                  int z, const std::optional<Rational>& prediction);
RandomizedOutcome evaluate(const MechanismSpec& spec, const Instance& instance);

bool is_randomized(const MechanismSpec& spec);
// Strategyproof members of the phantom family (everything except Oracle).
bool is_strategyproof(const MechanismSpec& spec);
// Finite phantom points, empty for other rules.
std::vector<Rational> finite_phantoms(const MechanismSpec& spec);

// Short label such as "left_z", "kth:3" or "in_range:1".
std::string mechanism_label(const MechanismSpec& spec);
// JSON tag: {"mech":"kth","k":3}.
std::string mechanism_to_json(const MechanismSpec& spec);
MechanismSpec parse_mechanism(std::string_view json_text);
// Accepts a bare name ("left_median") or a JSON tag.
MechanismSpec parse_mechanism_arg(std::string_view text);

// Phantom vector reproducing the k-th order statistic for n agents.
std::vector<ExtendedRational> kth_phantoms(int n, int k);

}  // namespace facloc

#endif  // FACLOC_MECHANISMS_HPP_
