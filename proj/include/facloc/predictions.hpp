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

#ifndef FACLOC_PREDICTIONS_HPP_
#define FACLOC_PREDICTIONS_HPP_

#include "facloc/extended.hpp"
#include "facloc/instance.hpp"
#include "facloc/rational.hpp"

namespace facloc {

struct PredictionError {
  ExtendedRational value;  // >= 1, +inf allowed
  bool degenerate = false; // optimum cost is zero
};

struct DeltaIndices {
  int i_opt = 0;
  int i_mech = 0;
  int delta = 0;
};

PredictionError prediction_error(const Instance& instance, const Rational& prediction,
                                 ObjectiveKind objective = ObjectiveKind::kUtilitarian);

// Rank distance between y and the nearest extreme utilitarian optimum.
DeltaIndices delta_index(const Instance& instance, const Rational& y);

Rational f_util(int n, int z);
Rational f_rand(int n, int z);
Rational f_robust(int n, int z);
ExtendedRational f_eta(int n, int z, const ExtendedRational& eta);
// Floored at 1; +inf where the denominator vanishes.
ExtendedRational f_delta(int n, int z, int delta);
int delta_c(int n, int z);
int delta_r(int n, int z);
int gamma_max(int n, int z);

// In-Range thresholds l = max(ceil((n-z+1)/2), z+1), r = min(ceil((n-z)/2)+z, n-z).
int in_range_left(int n, int z);
int in_range_right(int n, int z);

}  // namespace facloc

#endif  // FACLOC_PREDICTIONS_HPP_
