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

#include "facloc/objectives.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "facloc/error.hpp"

namespace facloc {

namespace {

// Sum of |v - y| over positions a..b (1-based, inclusive).
Rational window_sum_cost(const SortedProfile& p, std::size_t a, std::size_t b, const Rational& y) {
  const auto& v = p.values();
  auto first = v.begin() + static_cast<std::ptrdiff_t>(a - 1);
  auto last = v.begin() + static_cast<std::ptrdiff_t>(b);
  std::size_t split = a - 1 + static_cast<std::size_t>(std::upper_bound(first, last, y) - first);
  Rational left_count(static_cast<std::int64_t>(split - (a - 1)));
  Rational right_count(static_cast<std::int64_t>(b - split));
  return y * left_count - p.window_sum(a, split) + p.window_sum(split + 1, b) - y * right_count;
}

Rational window_max_cost(const SortedProfile& p, std::size_t a, std::size_t b, const Rational& y) {
  return max(abs(p.at(a) - y), abs(p.at(b) - y));
}

void check_z(std::size_t n, int z) {
  require(z >= 0 && static_cast<std::size_t>(z) < n, ErrorKind::kDomain,
          "z outside [0, n-1]");
}

void finish_alternates(OptimalSolution& best, std::vector<Rational>& ties) {
  std::sort(ties.begin(), ties.end());
  ties.erase(std::unique(ties.begin(), ties.end()), ties.end());
  for (Rational& t : ties) {
    if (t != best.location) best.alternates.push_back(std::move(t));
  }
}

}  // namespace

Evaluation eval_cost(const SortedProfile& profile, int z, const Rational& y,
                     ObjectiveKind objective) {
  check_z(profile.size(), z);
  std::size_t lo = 1;
  std::size_t hi = profile.size();
  for (int dropped = 0; dropped < z; ++dropped) {
    if (abs(profile.at(lo) - y) > abs(profile.at(hi) - y)) {
      ++lo;
    } else {
      --hi;
    }
  }
  Evaluation e;
  e.window = Window{static_cast<int>(lo - 1), static_cast<int>(profile.size() - hi)};
  e.cost = objective == ObjectiveKind::kUtilitarian ? window_sum_cost(profile, lo, hi, y)
                                                    : window_max_cost(profile, lo, hi, y);
  return e;
}

Evaluation eval_cost(const Instance& instance, const Rational& y, ObjectiveKind objective) {
  return eval_cost(instance.sorted(), instance.z(), y, objective);
}

OptimalSolution opt_utilitarian(const SortedProfile& profile, int z) {
  check_z(profile.size(), z);
  const std::size_t n = profile.size();
  const std::size_t m = n - static_cast<std::size_t>(z);
  OptimalSolution best;
  bool have = false;
  std::vector<std::pair<Rational, Rational>> candidates;  // (cost, location)
  for (int zl = 0; zl <= z; ++zl) {
    std::size_t a = static_cast<std::size_t>(zl) + 1;
    std::size_t b = a + m - 1;
    const Rational& left = profile.at(a + (m - 1) / 2);
    const Rational& right = profile.at(a + m / 2);
    Rational cost = window_sum_cost(profile, a, b, left);
    if (!have || cost < best.cost) {
      best.location = left;
      best.cost = cost;
      best.window = Window{zl, z - zl};
      have = true;
    }
    candidates.emplace_back(cost, left);
    if (right != left) candidates.emplace_back(cost, right);
  }
  std::vector<Rational> ties;
  for (auto& [cost, loc] : candidates) {
    if (cost == best.cost) ties.push_back(loc);
  }
  finish_alternates(best, ties);

  if (z >= 1 && static_cast<std::size_t>(z) <= n - 2) {
    // The order statistics ceil((m+1)/2) .. ceil(m/2)+z always contain an optimum.
    std::size_t first = (m + 2) / 2;
    std::size_t last = (m + 1) / 2 + static_cast<std::size_t>(z);
    std::size_t expected = m % 2 == 0 ? static_cast<std::size_t>(z) : static_cast<std::size_t>(z) + 1;
    require(last - first + 1 == expected, ErrorKind::kInternal, "candidate set has wrong size");
    Rational o_best = eval_cost(profile, z, profile.at(first), ObjectiveKind::kUtilitarian).cost;
    for (std::size_t k = first + 1; k <= last; ++k) {
      o_best = min(o_best, eval_cost(profile, z, profile.at(k), ObjectiveKind::kUtilitarian).cost);
    }
    require(o_best == best.cost, ErrorKind::kInternal, "candidate set misses the optimum");
  }
  return best;
}

OptimalSolution opt_utilitarian(const Instance& instance) {
  return opt_utilitarian(instance.sorted(), instance.z());
}

OptimalSolution opt_egalitarian(const SortedProfile& profile, int z) {
  check_z(profile.size(), z);
  const std::size_t m = profile.size() - static_cast<std::size_t>(z);
  OptimalSolution best;
  bool have = false;
  std::vector<std::pair<Rational, Rational>> candidates;
  const Rational half(1, 2);
  for (int zl = 0; zl <= z; ++zl) {
    std::size_t a = static_cast<std::size_t>(zl) + 1;
    std::size_t b = a + m - 1;
    Rational cost = (profile.at(b) - profile.at(a)) * half;
    Rational mid = (profile.at(a) + profile.at(b)) * half;
    if (!have || cost < best.cost) {
      best.location = mid;
      best.cost = cost;
      best.window = Window{zl, z - zl};
      have = true;
    }
    candidates.emplace_back(std::move(cost), std::move(mid));
  }
  std::vector<Rational> ties;
  for (auto& [cost, loc] : candidates) {
    if (cost == best.cost) ties.push_back(loc);
  }
  finish_alternates(best, ties);
  return best;
}

OptimalSolution opt_egalitarian(const Instance& instance) {
  return opt_egalitarian(instance.sorted(), instance.z());
}

OptimalSolution solve(const SortedProfile& profile, int z, ObjectiveKind objective) {
  return objective == ObjectiveKind::kUtilitarian ? opt_utilitarian(profile, z)
                                                  : opt_egalitarian(profile, z);
}

OptimalSolution solve(const Instance& instance, ObjectiveKind objective) {
  return solve(instance.sorted(), instance.z(), objective);
}

std::pair<Rational, Rational> optimal_extremes(const OptimalSolution& solution) {
  Rational lo = solution.location;
  Rational hi = solution.location;
  for (const Rational& a : solution.alternates) {
    lo = min(lo, a);
    hi = max(hi, a);
  }
  return {lo, hi};
}

OptimalSolution brute_force_opt(const Instance& instance, ObjectiveKind objective) {
  const int n = instance.n();
  require(n <= kBruteForceLimit, ErrorKind::kLimit,
          "brute force limited to n <= " + std::to_string(kBruteForceLimit));
  const auto& v = instance.sorted().values();
  const int m = n - instance.z();
  const Rational half(1, 2);

  OptimalSolution best;
  std::uint32_t best_mask = 0;
  bool have = false;
  std::vector<Rational> chosen;
  chosen.reserve(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != m) continue;
    chosen.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) chosen.push_back(v[static_cast<std::size_t>(i)]);
    }
    Rational loc;
    Rational cost;
    if (objective == ObjectiveKind::kUtilitarian) {
      loc = chosen[static_cast<std::size_t>((m - 1) / 2)];
      for (const Rational& c : chosen) cost += abs(c - loc);
    } else {
      loc = (chosen.front() + chosen.back()) * half;
      cost = (chosen.back() - chosen.front()) * half;
    }
    if (!have || cost < best.cost || (cost == best.cost && loc < best.location)) {
      best.cost = cost;
      best.location = loc;
      best_mask = mask;
      have = true;
    }
  }

  chosen.clear();
  int lowest = -1;
  for (int i = 0; i < n; ++i) {
    if (best_mask & (1u << i)) {
      if (lowest < 0) lowest = i;
      chosen.push_back(v[static_cast<std::size_t>(i)]);
    }
  }
  best.contiguous = false;
  for (int a = 0; a + m <= n && !best.contiguous; ++a) {
    best.contiguous = std::equal(chosen.begin(), chosen.end(), v.begin() + a);
  }
  best.window = Window{lowest, instance.z() - lowest};
  for (int a = 0; a + m <= n; ++a) {
    if (std::equal(chosen.begin(), chosen.end(), v.begin() + a)) {
      best.window = Window{a, instance.z() - a};
      break;
    }
  }
  return best;
}

Rational eval_oracle(const Instance& instance, const Rational& y, ObjectiveKind objective) {
  const int n = instance.n();
  require(n <= kBruteForceLimit, ErrorKind::kLimit,
          "subset oracle limited to n <= " + std::to_string(kBruteForceLimit));
  const int m = n - instance.z();
  std::vector<Rational> dist;
  dist.reserve(static_cast<std::size_t>(n));
  for (const Rational& x : instance.locations()) dist.push_back(abs(x - y));

  // acc[mask] aggregates the distances of the agents in mask.
  std::vector<Rational> acc(std::size_t{1} << n);
  std::optional<Rational> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t rest = mask & (mask - 1);
    const Rational& d = dist[static_cast<std::size_t>(std::countr_zero(mask))];
    acc[mask] = objective == ObjectiveKind::kUtilitarian ? acc[rest] + d : max(acc[rest], d);
    if (std::popcount(mask) == m && (!best || acc[mask] < *best)) best = acc[mask];
  }
  return *best;
}

}  // namespace facloc
