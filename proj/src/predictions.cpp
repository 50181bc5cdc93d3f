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

#include "facloc/predictions.hpp"

#include <algorithm>
#include <vector>

#include "facloc/error.hpp"
#include "facloc/objectives.hpp"

namespace facloc {

namespace {

void require_feasible(int n, int z) {
  require(mechanism_feasible(n, z), ErrorKind::kDomain,
          "(n=" + std::to_string(n) + ", z=" + std::to_string(z) +
              ") outside n >= 3, 1 <= z <= floor((n-1)/2)");
}

int ceil_half(int v) { return (v + 1) / 2; }

}  // namespace

PredictionError prediction_error(const Instance& instance, const Rational& prediction,
                                 ObjectiveKind objective) {
  Rational opt = solve(instance, objective).cost;
  Rational cost = eval_cost(instance, prediction, objective).cost;
  PredictionError e;
  if (opt.sign() == 0) {
    e.degenerate = true;
    e.value = cost.sign() == 0 ? ExtendedRational(1) : ExtendedRational::pos_inf();
  } else {
    e.value = cost / opt;
  }
  return e;
}

DeltaIndices delta_index(const Instance& instance, const Rational& y) {
  const SortedProfile& profile = instance.sorted();
  const auto& v = profile.values();
  const int n = instance.n();
  const int z = instance.z();
  const int m = n - z;
  Rational opt = opt_utilitarian(instance).cost;
  auto first_at = [&](const Rational& q) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), q) - v.begin()) + 1;
  };
  auto last_at = [&](const Rational& q) {
    return static_cast<int>(std::upper_bound(v.begin(), v.end(), q) - v.begin());
  };
  DeltaIndices best;
  if (eval_cost(instance, y, ObjectiveKind::kUtilitarian).cost == opt) {
    best.i_opt = best.i_mech = first_at(y);
    return best;
  }
  bool reported = std::binary_search(v.begin(), v.end(), y);
  best.delta = -1;
  // i(y*) is the median position of an optimal retained window.
  auto sum = [&](int a, int b) { return profile.window_sum(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); };
  for (int zl = 0; zl <= z; ++zl) {
    int left = zl + (m + 1) / 2;
    int right = zl + m / 2 + 1;
    int last = zl + m;
    const Rational& med = profile.at(static_cast<std::size_t>(left));
    Rational cost = sum(left + 1, last) - med * Rational(last - left) + med * Rational(left - zl) - sum(zl + 1, left);
    if (cost != opt) continue;
    DeltaIndices d;
    if (y > profile.at(static_cast<std::size_t>(right))) {
      d.i_opt = right;
      d.i_mech = reported ? last_at(y) : last_at(y) + 1;
    } else {
      d.i_opt = left;
      d.i_mech = reported ? first_at(y) : first_at(y) - 1;
    }
    d.delta = std::abs(d.i_opt - d.i_mech);
    if (best.delta < 0 || d.delta < best.delta) best = d;
  }
  return best;
}

Rational f_util(int n, int z) {
  require_feasible(n, z);
  if (n % 2 == 1) return Rational(n - 1, n - 2 * z + 1);
  return Rational(n, n - 2 * z);
}

Rational f_rand(int n, int z) {
  require_feasible(n, z);
  require(n % 2 == 0, ErrorKind::kDomain, "f_rand needs n even");
  if (z == 1) return Rational(n - 1, n - 2);
  std::int64_t nn = n;
  std::int64_t zz = z;
  return Rational(nn * nn - 2 * nn * zz + 2 * zz, (nn - 2 * zz) * (nn - 2 * zz + 2));
}

Rational f_robust(int n, int z) {
  require(z >= 1 && n >= 3 * z, ErrorKind::kDomain, "f_robust needs z >= 1 and n >= 3z");
  if ((n - z) % 2 == 1) return Rational(n + z - 1, n - 3 * z + 1);
  return Rational(n + z - 2, n - 3 * z + 2);
}

ExtendedRational f_eta(int n, int z, const ExtendedRational& eta) {
  require(eta >= ExtendedRational(1), ErrorKind::kDomain, "eta must be at least 1");
  ExtendedRational cap(f_robust(n, z));
  return eta < cap ? eta : cap;
}

ExtendedRational f_delta(int n, int z, int delta) {
  require(z >= 1 && n >= 2 * z + 1 && n <= 3 * z - 1, ErrorKind::kDomain,
          "f_delta needs 2z+1 <= n <= 3z-1");
  require(delta >= 0 && delta < n, ErrorKind::kDomain, "f_delta needs 0 <= delta <= n-1");
  Rational num;
  Rational den;
  if ((n - z) % 2 == 1) {
    Rational h(n - z - 1, 2);
    num = h + Rational(delta);
    den = h + Rational(1 - delta);
  } else {
    Rational h(n - z, 2);
    num = h + Rational(delta);
    den = h - Rational(delta);
  }
  if (den.sign() <= 0) return ExtendedRational::pos_inf();
  return max(num / den, Rational(1));
}

int delta_c(int n, int z) { return z + 1 - ceil_half(n - z + 1); }

int delta_r(int n, int z) { return n - z - ceil_half(n - z + 1); }

int gamma_max(int n, int z) {
  require_feasible(n, z);
  if (z == 1) return 0;
  if (n % 2 == 0 && z % 2 == 0) return z / 2 - 1;
  return z / 2;
}

int in_range_left(int n, int z) { return std::max(ceil_half(n - z + 1), z + 1); }

int in_range_right(int n, int z) { return std::min(ceil_half(n - z) + z, n - z); }

}  // namespace facloc
