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

#ifndef FACLOC_INSTANCE_HPP_
#define FACLOC_INSTANCE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "facloc/rational.hpp"

namespace facloc {

enum class ObjectiveKind { kUtilitarian, kEgalitarian };

std::string_view objective_name(ObjectiveKind kind);
ObjectiveKind parse_objective(std::string_view name);

// Ascending view of a profile with prefix sums. Positions are 1-based in the
// accessors below, matching order-statistic notation.
class SortedProfile {
 public:
  explicit SortedProfile(std::span<const Rational> locations);
  // Takes values that are already sorted; index_map becomes the identity.
  static SortedProfile from_sorted(std::vector<Rational> sorted);

  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const std::vector<Rational>& prefix_sums() const { return prefix_; }
  const std::vector<std::size_t>& index_map() const { return index_map_; }

  const Rational& at(std::size_t k) const { return values_[k - 1]; }
  // Sum of positions a..b inclusive; zero when a > b.
  Rational window_sum(std::size_t a, std::size_t b) const;

 private:
  SortedProfile() = default;
  void build_prefix();

  std::vector<Rational> values_;
  std::vector<Rational> prefix_;
  std::vector<std::size_t> index_map_;
};

class Instance {
 public:
  Instance(std::vector<Rational> locations, int z,
           std::optional<Rational> prediction = std::nullopt);

  int n() const { return static_cast<int>(locations_.size()); }
  int z() const { return z_; }
  const std::vector<Rational>& locations() const { return locations_; }
  const std::optional<Rational>& prediction() const { return prediction_; }
  const SortedProfile& sorted() const { return *sorted_; }

  // n >= 3 and 1 <= z <= floor((n-1)/2).
  bool mechanism_feasible() const;

  Instance with_location(std::size_t agent, const Rational& value) const;
  Instance with_outliers(int z) const;
  Instance with_prediction(std::optional<Rational> prediction) const;

 private:
  std::vector<Rational> locations_;
  int z_;
  std::optional<Rational> prediction_;
  std::shared_ptr<const SortedProfile> sorted_;
};

bool mechanism_feasible(int n, int z);

// x_{sigma(k)} for 1 <= k <= n.
const Rational& order_statistic(const SortedProfile& profile, int k);

struct ParsedInstance {
  Instance instance;
  std::optional<ObjectiveKind> objective;
};

ParsedInstance parse_instance(std::string_view text);
std::string instance_to_json(const Instance& instance,
                             std::optional<ObjectiveKind> objective = std::nullopt);

}  // namespace facloc

#endif  // FACLOC_INSTANCE_HPP_
