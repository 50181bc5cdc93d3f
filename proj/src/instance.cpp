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

#include "facloc/instance.hpp"

#include <algorithm>
#include <numeric>

#include "facloc/error.hpp"
#include "json.hpp"

namespace facloc {

using nlohmann::json;

std::string_view objective_name(ObjectiveKind kind) {
  return kind == ObjectiveKind::kUtilitarian ? "utilitarian" : "egalitarian";
}

ObjectiveKind parse_objective(std::string_view name) {
  if (name == "utilitarian" || name == "sc") return ObjectiveKind::kUtilitarian;
  if (name == "egalitarian" || name == "mc") return ObjectiveKind::kEgalitarian;
  fail(ErrorKind::kInvalidInput, "unknown objective '" + std::string(name) + "'");
}

SortedProfile::SortedProfile(std::span<const Rational> locations) {
  index_map_.resize(locations.size());
  std::iota(index_map_.begin(), index_map_.end(), std::size_t{0});
  std::stable_sort(index_map_.begin(), index_map_.end(),
                   [&](std::size_t a, std::size_t b) { return locations[a] < locations[b]; });
  values_.reserve(locations.size());
  for (std::size_t i : index_map_) values_.push_back(locations[i]);
  build_prefix();
}

SortedProfile SortedProfile::from_sorted(std::vector<Rational> sorted) {
  SortedProfile p;
  p.values_ = std::move(sorted);
  p.index_map_.resize(p.values_.size());
  std::iota(p.index_map_.begin(), p.index_map_.end(), std::size_t{0});
  p.build_prefix();
  return p;
}

void SortedProfile::build_prefix() {
  prefix_.assign(values_.size() + 1, Rational());
  for (std::size_t k = 0; k < values_.size(); ++k) prefix_[k + 1] = prefix_[k] + values_[k];
}

Rational SortedProfile::window_sum(std::size_t a, std::size_t b) const {
  if (a > b) return Rational();
  return prefix_[b] - prefix_[a - 1];
}

Instance::Instance(std::vector<Rational> locations, int z, std::optional<Rational> prediction)
    : locations_(std::move(locations)), z_(z), prediction_(std::move(prediction)) {
  require(!locations_.empty(), ErrorKind::kInvalidInput, "instance needs at least one location");
  require(z_ >= 0 && z_ <= n() - 1, ErrorKind::kInvalidInput,
          "z=" + std::to_string(z_) + " outside [0, n-1] for n=" + std::to_string(n()));
  sorted_ = std::make_shared<const SortedProfile>(locations_);
}

bool mechanism_feasible(int n, int z) { return n >= 3 && z >= 1 && z <= (n - 1) / 2; }

bool Instance::mechanism_feasible() const { return facloc::mechanism_feasible(n(), z_); }

Instance Instance::with_location(std::size_t agent, const Rational& value) const {
  require(agent < locations_.size(), ErrorKind::kDomain, "agent index out of range");
  std::vector<Rational> next = locations_;
  next[agent] = value;
  return Instance(std::move(next), z_, prediction_);
}

Instance Instance::with_outliers(int z) const { return Instance(locations_, z, prediction_); }

Instance Instance::with_prediction(std::optional<Rational> prediction) const {
  Instance copy = *this;
  copy.prediction_ = std::move(prediction);
  return copy;
}

const Rational& order_statistic(const SortedProfile& profile, int k) {
  require(k >= 1 && static_cast<std::size_t>(k) <= profile.size(), ErrorKind::kDomain,
          "order statistic k=" + std::to_string(k) + " outside [1, " +
              std::to_string(profile.size()) + "]");
  return profile.at(static_cast<std::size_t>(k));
}

namespace {

Rational literal(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      return Rational::parse(std::to_string(v.get<std::uint64_t>()));
    }
    return Rational(v.get<std::int64_t>());
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
    auto den = v[1].get<std::int64_t>();
    require(den != 0, ErrorKind::kInvalidInput, "zero denominator in fraction pair");
    return Rational(v[0].get<std::int64_t>(), den);
  }
  if (v.is_number_float()) {
    fail(ErrorKind::kInvalidInput, "binary float literal " + v.dump() +
                                       " rejected; quote it as a decimal string");
  }
  fail(ErrorKind::kInvalidInput, "expected a rational literal, got " + v.dump());
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kInvalidInput, std::string("malformed instance document: ") + e.what());
  }
  require(doc.is_object(), ErrorKind::kInvalidInput, "instance document must be an object");
  require(doc.contains("locations") && doc["locations"].is_array(), ErrorKind::kInvalidInput,
          "instance needs a 'locations' array");
  require(doc.contains("z") && doc["z"].is_number_integer(), ErrorKind::kInvalidInput,
          "instance needs an integer 'z'");
  std::vector<Rational> locations;
  for (const json& v : doc["locations"]) locations.push_back(literal(v));
  auto z = doc["z"].get<std::int64_t>();
  require(z >= 0 && z <= static_cast<std::int64_t>(locations.size()) - 1,
          ErrorKind::kInvalidInput, "z outside [0, n-1]");
  std::optional<Rational> prediction;
  if (doc.contains("prediction") && !doc["prediction"].is_null()) {
    prediction = literal(doc["prediction"]);
  }
  std::optional<ObjectiveKind> objective;
  if (doc.contains("objective") && !doc["objective"].is_null()) {
    require(doc["objective"].is_string(), ErrorKind::kInvalidInput, "objective must be a string");
    objective = parse_objective(doc["objective"].get<std::string>());
  }
  return ParsedInstance{Instance(std::move(locations), static_cast<int>(z), prediction), objective};
}

std::string instance_to_json(const Instance& instance, std::optional<ObjectiveKind> objective) {
  json doc;
  doc["locations"] = json::array();
  for (const Rational& x : instance.locations()) doc["locations"].push_back(x.to_string());
  doc["z"] = instance.z();
  if (instance.prediction()) doc["prediction"] = instance.prediction()->to_string();
  if (objective) doc["objective"] = std::string(objective_name(*objective));
  return doc.dump();
}

}  // namespace facloc
