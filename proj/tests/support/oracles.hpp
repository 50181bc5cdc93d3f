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

#ifndef FACLOC_TESTS_SUPPORT_ORACLES_HPP_
#define FACLOC_TESTS_SUPPORT_ORACLES_HPP_

// Deliberately naive reference implementations. None of these share code with
// the library beyond the Rational type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "facloc/extended.hpp"
#include "facloc/rational.hpp"

namespace facloc::testing {

inline std::vector<Rational> sorted_copy(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// k-th smallest by repeated minimum extraction.
inline Rational naive_kth(std::vector<Rational> v, int k) {
  Rational out;
  for (int step = 0; step < k; ++step) {
    auto it = std::min_element(v.begin(), v.end());
    out = *it;
    v.erase(it);
  }
  return out;
}

inline ExtendedRational naive_phantom_median(const std::vector<Rational>& x,
                                             const std::vector<ExtendedRational>& alphas) {
  std::vector<ExtendedRational> all(alphas.begin(), alphas.end());
  for (const Rational& v : x) all.emplace_back(v);
  std::sort(all.begin(), all.end());
  return all[x.size()];
}

// Recursive subset search: chooses which agents to keep.
inline Rational naive_cost(const std::vector<Rational>& x, int z, const Rational& y, bool utilitarian) {
  const int n = static_cast<int>(x.size());
  const int keep = n - z;
  bool have = false;
  Rational best;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int i) {
    if (static_cast<int>(chosen.size()) == keep) {
      Rational c;
      for (int j : chosen) {
        Rational d = abs(x[static_cast<std::size_t>(j)] - y);
        c = utilitarian ? c + d : max(c, d);
      }
      if (!have || c < best) {
        best = c;
        have = true;
      }
      return;
    }
    if (i == n || n - i < keep - static_cast<int>(chosen.size())) return;
    chosen.push_back(i);
    rec(i + 1);
    chosen.pop_back();
    rec(i + 1);
  };
  rec(0);
  return best;
}

// Optimum over a dense candidate set: every report and every midpoint. Both
// objectives attain their optimum on this set.
inline Rational naive_opt(const std::vector<Rational>& x, int z, bool utilitarian) {
  std::vector<Rational> cand = x;
  for (const Rational& a : x) {
    for (const Rational& b : x) cand.push_back((a + b) * Rational(1, 2));
  }
  Rational best = naive_cost(x, z, cand.front(), utilitarian);
  for (const Rational& c : cand) best = min(best, naive_cost(x, z, c, utilitarian));
  return best;
}

inline std::vector<Rational> random_profile(std::mt19937_64& rng, int n, std::int64_t grid = 20) {
  std::uniform_int_distribution<std::int64_t> pick(0, grid);
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) x.emplace_back(pick(rng), grid);
  return x;
}

}  // namespace facloc::testing

#endif  // FACLOC_TESTS_SUPPORT_ORACLES_HPP_
