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

#ifndef FACLOC_OBJECTIVES_HPP_
#define FACLOC_OBJECTIVES_HPP_

#include <vector>

#include "facloc/instance.hpp"
#include "facloc/rational.hpp"

namespace facloc {

// Excluded prefix and suffix of the sorted profile; z_left + z_right = z.
struct Window {
  int z_left = 0;
  int z_right = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

struct Evaluation {
  Rational cost;
  Window window;
};

struct OptimalSolution {
  Rational location;
  Rational cost;
  Window window;
  // Other distinct optimal locations among the candidates, ascending.
  std::vector<Rational> alternates;
  // Only meaningful for brute_force_opt: whether the winning subset is a
  // contiguous run of the sorted profile.
  bool contiguous = true;
};

// Largest n accepted by the subset-enumeration routines.
inline constexpr int kBruteForceLimit = 14;

Evaluation eval_cost(const Instance& instance, const Rational& y, ObjectiveKind objective);
Evaluation eval_cost(const SortedProfile& profile, int z, const Rational& y,
                     ObjectiveKind objective);

OptimalSolution opt_utilitarian(const Instance& instance);
OptimalSolution opt_utilitarian(const SortedProfile& profile, int z);
OptimalSolution opt_egalitarian(const Instance& instance);
OptimalSolution opt_egalitarian(const SortedProfile& profile, int z);
OptimalSolution solve(const Instance& instance, ObjectiveKind objective);
OptimalSolution solve(const SortedProfile& profile, int z, ObjectiveKind objective);

// Leftmost and rightmost optimal locations.
std::pair<Rational, Rational> optimal_extremes(const OptimalSolution& solution);

OptimalSolution brute_force_opt(const Instance& instance, ObjectiveKind objective);
Rational eval_oracle(const Instance& instance, const Rational& y, ObjectiveKind objective);

}  // namespace facloc

#endif  // FACLOC_OBJECTIVES_HPP_
