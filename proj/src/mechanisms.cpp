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

#include "facloc/mechanisms.hpp"

#include <algorithm>

#include "facloc/error.hpp"
#include "facloc/objectives.hpp"
#include "facloc/predictions.hpp"
#include "json.hpp"

namespace facloc {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_mech_feasible(int n, int z, const char* name) {
  require(mechanism_feasible(n, z), ErrorKind::kDomain,
          std::string(name) + " needs n >= 3 and 1 <= z <= floor((n-1)/2), got n=" +
              std::to_string(n) + ", z=" + std::to_string(z));
}

const Rational& kth_sorted(std::span<const Rational> sorted, int k) {
  require(k >= 1 && static_cast<std::size_t>(k) <= sorted.size(), ErrorKind::kDomain,
          "k=" + std::to_string(k) + " outside [1, " + std::to_string(sorted.size()) + "]");
  return sorted[static_cast<std::size_t>(k - 1)];
}

ExtendedRational phantom_sorted(std::span<const Rational> sorted,
                                std::span<const ExtendedRational> alphas) {
  const std::size_t n = sorted.size();
  require(alphas.size() == n + 1, ErrorKind::kDomain,
          "phantom median needs n+1=" + std::to_string(n + 1) + " phantoms, got " +
              std::to_string(alphas.size()));
  std::vector<ExtendedRational> phantoms(alphas.begin(), alphas.end());
  std::sort(phantoms.begin(), phantoms.end());
  std::size_t i = 0;
  std::size_t j = 0;
  for (std::size_t taken = 1;; ++taken) {
    bool take_real = j == phantoms.size() || (i < n && ExtendedRational(sorted[i]) <= phantoms[j]);
    if (taken == n + 1) return take_real ? ExtendedRational(sorted[i]) : phantoms[j];
    if (take_real) {
      ++i;
    } else {
      ++j;
    }
  }
}

RandomizedOutcome rand_median_sorted(std::span<const Rational> sorted, int z) {
  const int n = static_cast<int>(sorted.size());
  require(n % 2 == 0, ErrorKind::kDomain, "rand_median needs an even number of agents");
  require(z >= 0 && z <= (n - 1) / 2, ErrorKind::kDomain, "rand_median needs z <= floor((n-1)/2)");
  const Rational& a = sorted[static_cast<std::size_t>(n / 2 - 1)];
  const Rational& b = sorted[static_cast<std::size_t>(n / 2)];
  if (a == b) return deterministic_outcome(a);
  RandomizedOutcome out;
  out.support.push_back(Atom{a, Rational(1, 2)});
  out.support.push_back(Atom{b, Rational(1, 2)});
  return out;
}

Rational in_range_sorted(std::span<const Rational> sorted, int z, const Rational& prediction,
                         int gamma) {
  const int n = static_cast<int>(sorted.size());
  require_mech_feasible(n, z, "in_range");
  require(gamma >= 0 && gamma <= gamma_max(n, z), ErrorKind::kDomain,
          "gamma=" + std::to_string(gamma) + " outside [0, " + std::to_string(gamma_max(n, z)) +
              "]");
  int l = in_range_left(n, z);
  int r = in_range_right(n, z);
  require(l <= r, ErrorKind::kInternal, "in_range thresholds cross");
  int g = std::min(gamma, (r - l) / 2);
  const Rational& lo = sorted[static_cast<std::size_t>(l + g - 1)];
  const Rational& hi = sorted[static_cast<std::size_t>(r - g - 1)];
  if (prediction < lo) return lo;
  if (prediction > hi) return hi;
  return prediction;
}

}  // namespace

const ExtendedRational& RandomizedOutcome::point() const {
  require(is_deterministic(), ErrorKind::kDomain, "outcome is not deterministic");
  return support.front().location;
}

ExtendedRational RandomizedOutcome::expected_distance(const Rational& p) const {
  ExtendedRational total(0);
  for (const Atom& a : support) total = add_nonneg(total, scale(a.probability, distance(a.location, p)));
  return total;
}

RandomizedOutcome deterministic_outcome(ExtendedRational location) {
  RandomizedOutcome out;
  out.support.push_back(Atom{std::move(location), Rational(1)});
  return out;
}

const Rational& left_z(const Instance& instance) {
  require_mech_feasible(instance.n(), instance.z(), "left_z");
  return instance.sorted().at(static_cast<std::size_t>(instance.z()) + 1);
}

const Rational& left_median(const Instance& instance) {
  return instance.sorted().at(static_cast<std::size_t>((instance.n() + 1) / 2));
}

const Rational& kth_order_statistic(const Instance& instance, int k) {
  return order_statistic(instance.sorted(), k);
}

ExtendedRational phantom_median(const Instance& instance, std::span<const ExtendedRational> alphas) {
  return phantom_sorted(instance.sorted().values(), alphas);
}

RandomizedOutcome rand_median(const Instance& instance) {
  return rand_median_sorted(instance.sorted().values(), instance.z());
}

Rational in_range(const Instance& instance, const Rational& prediction, int gamma) {
  return in_range_sorted(instance.sorted().values(), instance.z(), prediction, gamma);
}

Rational oracle_mechanism(const Instance& instance, ObjectiveKind objective) {
  return solve(instance, objective).location;
}

RandomizedOutcome evaluate_sorted(const MechanismSpec& spec, std::span<const Rational> sorted,
                                  int z, const std::optional<Rational>& prediction) {
  const int n = static_cast<int>(sorted.size());
  return std::visit(
      Overloaded{
          [&](const mech::LeftZ&) {
            require_mech_feasible(n, z, "left_z");
            return deterministic_outcome(sorted[static_cast<std::size_t>(z)]);
          },
          [&](const mech::LeftMedian&) {
            return deterministic_outcome(sorted[static_cast<std::size_t>((n + 1) / 2 - 1)]);
          },
          [&](const mech::Kth& m) { return deterministic_outcome(kth_sorted(sorted, m.k)); },
          [&](const mech::Phantom& m) { return deterministic_outcome(phantom_sorted(sorted, m.alphas)); },
          [&](const mech::RandMedian&) { return rand_median_sorted(sorted, z); },
          [&](const mech::InRange& m) {
            require(prediction.has_value(), ErrorKind::kInvalidInput, "in_range needs a prediction");
            return deterministic_outcome(in_range_sorted(sorted, z, *prediction, m.gamma));
          },
          [&](const mech::Oracle& m) {
            SortedProfile p = SortedProfile::from_sorted(std::vector<Rational>(sorted.begin(), sorted.end()));
            return deterministic_outcome(solve(p, z, m.objective).location);
          },
      },
      spec);
}

RandomizedOutcome evaluate(const MechanismSpec& spec, const Instance& instance) {
  return evaluate_sorted(spec, instance.sorted().values(), instance.z(), instance.prediction());
}

bool is_randomized(const MechanismSpec& spec) { return std::holds_alternative<mech::RandMedian>(spec); }

bool is_strategyproof(const MechanismSpec& spec) { return !std::holds_alternative<mech::Oracle>(spec); }

std::vector<Rational> finite_phantoms(const MechanismSpec& spec) {
  std::vector<Rational> out;
  if (const auto* p = std::get_if<mech::Phantom>(&spec)) {
    for (const auto& a : p->alphas) {
      if (a.is_finite()) out.push_back(a.value());
    }
  }
  return out;
}

std::string mechanism_label(const MechanismSpec& spec) {
  return std::visit(
      Overloaded{
          [](const mech::LeftZ&) { return std::string("left_z"); },
          [](const mech::LeftMedian&) { return std::string("left_median"); },
          [](const mech::Kth& m) { return "kth:" + std::to_string(m.k); },
          [](const mech::Phantom&) { return std::string("phantom"); },
          [](const mech::RandMedian&) { return std::string("rand_median"); },
          [](const mech::InRange& m) { return "in_range:" + std::to_string(m.gamma); },
          [](const mech::Oracle& m) { return "oracle:" + std::string(objective_name(m.objective)); },
      },
      spec);
}

std::string mechanism_to_json(const MechanismSpec& spec) {
  json doc;
  std::visit(Overloaded{
                 [&](const mech::LeftZ&) { doc["mech"] = "left_z"; },
                 [&](const mech::LeftMedian&) { doc["mech"] = "left_median"; },
                 [&](const mech::Kth& m) {
                   doc["mech"] = "kth";
                   doc["k"] = m.k;
                 },
                 [&](const mech::Phantom& m) {
                   doc["mech"] = "phantom";
                   doc["alphas"] = json::array();
                   for (const auto& a : m.alphas) doc["alphas"].push_back(a.to_string());
                 },
                 [&](const mech::RandMedian&) { doc["mech"] = "rand_median"; },
                 [&](const mech::InRange& m) {
                   doc["mech"] = "in_range";
                   doc["gamma"] = m.gamma;
                 },
                 [&](const mech::Oracle& m) {
                   doc["mech"] = "oracle";
                   doc["objective"] = std::string(objective_name(m.objective));
                 },
             },
             spec);
  return doc.dump();
}

MechanismSpec parse_mechanism(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kInvalidInput, std::string("malformed mechanism document: ") + e.what());
  }
  require(doc.is_object() && doc.contains("mech") && doc["mech"].is_string(),
          ErrorKind::kInvalidInput, "mechanism document needs a string 'mech'");
  auto int_field = [&](const char* key, int fallback) {
    if (!doc.contains(key)) return fallback;
    require(doc[key].is_number_integer(), ErrorKind::kInvalidInput,
            std::string("'") + key + "' must be an integer");
    return doc[key].get<int>();
  };
  std::string name = doc["mech"].get<std::string>();
  if (name == "left_z") return mech::LeftZ{};
  if (name == "left_median") return mech::LeftMedian{};
  if (name == "rand_median") return mech::RandMedian{};
  if (name == "kth") {
    require(doc.contains("k"), ErrorKind::kInvalidInput, "kth needs 'k'");
    return mech::Kth{int_field("k", 1)};
  }
  if (name == "in_range") return mech::InRange{int_field("gamma", 0)};
  if (name == "oracle") {
    ObjectiveKind objective = ObjectiveKind::kUtilitarian;
    if (doc.contains("objective")) {
      require(doc["objective"].is_string(), ErrorKind::kInvalidInput, "objective must be a string");
      objective = parse_objective(doc["objective"].get<std::string>());
    }
    return mech::Oracle{objective};
  }
  if (name == "phantom") {
    require(doc.contains("alphas") && doc["alphas"].is_array(), ErrorKind::kInvalidInput,
            "phantom needs an 'alphas' array");
    mech::Phantom p;
    for (const json& a : doc["alphas"]) {
      if (a.is_string()) {
        p.alphas.push_back(ExtendedRational::parse(a.get<std::string>()));
      } else if (a.is_number_integer()) {
        p.alphas.emplace_back(Rational(a.get<std::int64_t>()));
      } else {
        fail(ErrorKind::kInvalidInput, "phantom points must be strings or integers");
      }
    }
    return p;
  }
  fail(ErrorKind::kInvalidInput, "unknown mechanism '" + name + "'");
}

MechanismSpec parse_mechanism_arg(std::string_view text) {
  if (!text.empty() && text.front() == '{') return parse_mechanism(text);
  json doc;
  doc["mech"] = std::string(text);
  return parse_mechanism(doc.dump());
}

std::vector<ExtendedRational> kth_phantoms(int n, int k) {
  require(k >= 1 && k <= n, ErrorKind::kDomain, "k outside [1, n]");
  std::vector<ExtendedRational> alphas(static_cast<std::size_t>(n + 1 - k), ExtendedRational::neg_inf());
  alphas.insert(alphas.end(), static_cast<std::size_t>(k), ExtendedRational::pos_inf());
  return alphas;
}

}  // namespace facloc
