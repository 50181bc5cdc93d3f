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

#include "facloc/verification.hpp"

#include <algorithm>

#include "facloc/error.hpp"
#include "facloc/objectives.hpp"
#include "facloc/predictions.hpp"

namespace facloc {

namespace {

void dedupe(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

ExtendedRational expected_location(const RandomizedOutcome& outcome) {
  Rational total;
  for (const Atom& a : outcome.support) {
    if (!a.location.is_finite()) return a.location;
    total += a.probability * a.location.value();
  }
  return total;
}

const std::vector<Rational>& row_for(const DeviationSet& set, std::size_t agent,
                                     const std::vector<Rational>& grid) {
  if (set.empty()) return grid;
  if (set.size() == 1) return set.front();
  require(agent < set.size(), ErrorKind::kInvalidInput, "deviation set has fewer rows than agents");
  return set[agent];
}

// Scans agents in index order and deviations in the given order. `eval`
// maps (agent, report) to the outcome of the modified profile.
template <class Eval>
std::optional<ViolationCertificate> scan(const Instance& truth, const DeviationSet& deviations,
                                         const std::vector<Rational>& grid,
                                         const RandomizedOutcome& truthful, bool skip_duplicates,
                                         Eval&& eval) {
  const auto& x = truth.locations();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (skip_duplicates && deviations.size() <= 1 &&
        std::find(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i), x[i]) !=
            x.begin() + static_cast<std::ptrdiff_t>(i)) {
      continue;
    }
    const Rational& p = x[i];
    ExtendedRational honest = truthful.expected_distance(p);
    if (honest == ExtendedRational(0)) continue;
    for (const Rational& d : row_for(deviations, i, grid)) {
      if (d == p) continue;
      RandomizedOutcome lied = eval(i, d);
      ExtendedRational cost = lied.expected_distance(p);
      if (cost < honest) {
        return ViolationCertificate{static_cast<int>(i), p, d, expected_location(truthful),
                                    expected_location(lied), honest, cost};
      }
    }
  }
  return std::nullopt;
}

std::optional<ViolationCertificate> check_spec(const MechanismSpec& spec, const Instance& truth,
                                               const DeviationSet& deviations) {
  RandomizedOutcome truthful = evaluate(spec, truth);
  std::vector<Rational> grid;
  if (deviations.empty()) grid = default_deviation_grid(truth, spec);
  const auto& sorted = truth.sorted().values();
  const auto& x = truth.locations();
  std::vector<Rational> others;
  std::vector<Rational> buffer;
  std::size_t cached_agent = x.size();
  return scan(truth, deviations, grid, truthful, true, [&](std::size_t agent, const Rational& d) {
    if (cached_agent != agent) {
      others = sorted;
      others.erase(std::lower_bound(others.begin(), others.end(), x[agent]));
      cached_agent = agent;
    }
    buffer.clear();
    auto at = std::upper_bound(others.begin(), others.end(), d);
    buffer.insert(buffer.end(), others.begin(), at);
    buffer.push_back(d);
    buffer.insert(buffer.end(), at, others.end());
    return evaluate_sorted(spec, buffer, truth.z(), truth.prediction());
  });
}

}  // namespace

std::vector<Rational> default_deviation_grid(const Instance& instance,
                                             const std::vector<ExtendedRational>& outcomes) {
  const auto& sorted = instance.sorted().values();
  std::vector<Rational> breaks(sorted.begin(), sorted.end());
  for (const auto& o : outcomes) {
    if (o.is_finite()) breaks.push_back(o.value());
  }
  if (instance.prediction()) breaks.push_back(*instance.prediction());
  dedupe(breaks);

  Rational span = breaks.back() - breaks.front();
  if (span.sign() == 0) span = Rational(1);
  std::vector<Rational> grid = breaks;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const Rational& a = breaks[k];
    Rational gap = breaks[k + 1] - a;
    for (int j = 1; j <= 8; ++j) grid.push_back(a + gap * Rational(j, 9));
    grid.push_back(a + gap * Rational(1, 2));
  }
  for (const auto& o : outcomes) {
    if (!o.is_finite()) continue;
    grid.push_back(o.value() - span);
    grid.push_back(o.value() + span);
  }
  grid.push_back(breaks.front() - span);
  grid.push_back(breaks.front() - span * Rational(2) - Rational(1));
  grid.push_back(breaks.back() + span);
  grid.push_back(breaks.back() + span * Rational(2) + Rational(1));
  dedupe(grid);
  return grid;
}

std::vector<Rational> default_deviation_grid(const Instance& instance, const MechanismSpec& spec) {
  std::vector<ExtendedRational> outcomes;
  for (const Atom& a : evaluate(spec, instance).support) outcomes.push_back(a.location);
  for (const Rational& p : finite_phantoms(spec)) outcomes.emplace_back(p);
  return default_deviation_grid(instance, outcomes);
}

std::optional<ViolationCertificate> check_sp_deterministic(const MechanismSpec& spec,
                                                           const Instance& truth,
                                                           const DeviationSet& deviations) {
  require(!is_randomized(spec), ErrorKind::kDomain,
          "check_sp_deterministic needs a deterministic mechanism");
  return check_spec(spec, truth, deviations);
}

std::optional<ViolationCertificate> check_sp_in_expectation(const MechanismSpec& spec,
                                                            const Instance& truth,
                                                            const DeviationSet& deviations) {
  return check_spec(spec, truth, deviations);
}

std::optional<ViolationCertificate> check_sp_rule(const Rule& rule, const Instance& truth,
                                                  const DeviationSet& deviations) {
  RandomizedOutcome truthful = rule(truth);
  std::vector<Rational> grid;
  if (deviations.empty()) {
    std::vector<ExtendedRational> outcomes;
    for (const Atom& a : truthful.support) outcomes.push_back(a.location);
    grid = default_deviation_grid(truth, outcomes);
  }
  return scan(truth, deviations, grid, truthful, false, [&](std::size_t agent, const Rational& d) {
    return rule(truth.with_location(agent, d));
  });
}

bool check_corollary_path(const MechanismSpec& spec, const Instance& instance, int agent_index,
                          int steps) {
  require(!is_randomized(spec), ErrorKind::kDomain, "corollary path needs a deterministic mechanism");
  require(agent_index >= 0 && agent_index < instance.n(), ErrorKind::kDomain,
          "agent index out of range");
  require(steps >= 1, ErrorKind::kDomain, "steps must be positive");
  ExtendedRational y = evaluate(spec, instance).point();
  require(y.is_finite(), ErrorKind::kDomain, "corollary path needs a finite outcome");
  const Rational& start = instance.locations()[static_cast<std::size_t>(agent_index)];
  Rational delta = y.value() - start;
  for (int j = 1; j <= steps; ++j) {
    Rational point = start + delta * Rational(j, steps);
    Instance moved = instance.with_location(static_cast<std::size_t>(agent_index), point);
    if (evaluate(spec, moved).point() != y) return false;
  }
  return true;
}

std::optional<ExtendedRational> applicable_bound(const MechanismSpec& spec, const Instance& instance,
                                                 ObjectiveKind objective,
                                                 const RandomizedOutcome& outcome) {
  const int n = instance.n();
  const int z = instance.z();
  const bool feasible = instance.mechanism_feasible();
  const bool util = objective == ObjectiveKind::kUtilitarian;
  if (const auto* o = std::get_if<mech::Oracle>(&spec)) {
    if (o->objective == objective) return ExtendedRational(1);
    return std::nullopt;
  }
  if (!feasible) return std::nullopt;
  if (std::holds_alternative<mech::LeftZ>(spec)) {
    if (!util) return ExtendedRational(2);
  } else if (std::holds_alternative<mech::LeftMedian>(spec)) {
    return util ? ExtendedRational(f_util(n, z)) : ExtendedRational(2);
  } else if (const auto* k = std::get_if<mech::Kth>(&spec)) {
    if (!util && k->k >= z + 1 && k->k <= n - z) return ExtendedRational(2);
  } else if (std::holds_alternative<mech::RandMedian>(spec)) {
    return util ? ExtendedRational(f_rand(n, z)) : ExtendedRational(2);
  } else if (const auto* r = std::get_if<mech::InRange>(&spec)) {
    if (!util || !instance.prediction()) return std::nullopt;
    if (n >= 3 * z) {
      const Rational& yhat = *instance.prediction();
      const auto& s = instance.sorted();
      bool inside = s.at(static_cast<std::size_t>(in_range_left(n, z))) <= yhat &&
                    yhat <= s.at(static_cast<std::size_t>(in_range_right(n, z)));
      if (r->gamma == 0 && inside) {
        return f_eta(n, z, prediction_error(instance, yhat).value);
      }
      return ExtendedRational(f_robust(n, z));
    }
    const ExtendedRational& y = outcome.point();
    return f_delta(n, z, delta_index(instance, y.value()).delta);
  }
  return std::nullopt;
}

RatioReport measure_ratio(const RandomizedOutcome& outcome, const Instance& instance,
                          ObjectiveKind objective) {
  RatioReport report;
  ExtendedRational cost(0);
  for (const Atom& a : outcome.support) {
    if (!a.location.is_finite()) {
      cost = ExtendedRational::pos_inf();
      break;
    }
    cost = add_nonneg(cost, a.probability * eval_cost(instance, a.location.value(), objective).cost);
  }
  report.mechanism_cost = cost;
  report.opt_cost = solve(instance, objective).cost;
  if (report.opt_cost.sign() > 0) {
    report.ratio = divide(cost, report.opt_cost);
  } else {
    report.ratio = cost == ExtendedRational(0) ? ExtendedRational(1) : ExtendedRational::pos_inf();
  }
  return report;
}

RatioReport measure_ratio(const MechanismSpec& spec, const Instance& instance,
                          ObjectiveKind objective) {
  RandomizedOutcome outcome = evaluate(spec, instance);
  RatioReport report = measure_ratio(outcome, instance, objective);
  report.bound = applicable_bound(spec, instance, objective, outcome);
  report.within_bound = !report.bound || report.ratio <= *report.bound;
  return report;
}

ReplayResult replay_sequence(const MechanismSpec& spec, const std::vector<ReplayStep>& steps) {
  ReplayResult result;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    RandomizedOutcome out = evaluate(spec, steps[s].instance);
    require(out.is_deterministic(), ErrorKind::kDomain, "replay needs a deterministic mechanism");
    result.outcomes.push_back(out.point());
    if (s == 0) continue;
    const ExtendedRational& before = result.outcomes[s - 1];
    int m = steps[s].mover;
    require(m >= 0 && m < steps[s].instance.n(), ErrorKind::kDomain, "replay step without a mover");
    const Rational& from = steps[s - 1].instance.locations()[static_cast<std::size_t>(m)];
    const Rational& to = steps[s].instance.locations()[static_cast<std::size_t>(m)];
    bool toward = before.is_finite() && ((from <= to && to <= before.value()) ||
                                         (before.value() <= to && to <= from));
    if (!toward) result.applicable = false;
    if (result.outcomes[s] != before && result.first_change < 0) {
      result.unchanged = false;
      result.first_change = static_cast<int>(s);
    }
  }
  return result;
}

}  // namespace facloc
