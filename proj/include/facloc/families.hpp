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

#ifndef FACLOC_FAMILIES_HPP_
#define FACLOC_FAMILIES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facloc/extended.hpp"
#include "facloc/instance.hpp"
#include "facloc/rational.hpp"
#include "facloc/verification.hpp"

namespace facloc {

// Adversarial profiles from the lower-bound constructions.
//   fig3a, fig3b  z >= ceil(n/2) impossibility pair
//   fig4          egalitarian clusters z | n-2z+delta | z-delta at 0, 1/2, 1
//   fig6          utilitarian profiles x^1..x^4 (variant) with spacing d
//   fig7          fig4 clusters with prediction 1/4 (variant 2: 3/4)
//   fig8          z-delta | n-2z+delta | z at 0, z*d, (z+1)*d, prediction (z+1)*d
//   fig9          four clusters at 0, d1, d1+d2, d1+d2+d3, prediction d1+d2
//   fig10         the eight-agent worked example with prediction 0
//   rand_lb_sc4, rand_lb_sc5, rand_lb_mc3  randomized lower-bound fixtures
//                 (variant 2 is the deviated profile)
enum class Family {
  kFig3A,
  kFig3B,
  kFig4,
  kFig6,
  kFig7,
  kFig8,
  kFig9,
  kFig10,
  kRandLbSc4,
  kRandLbSc5,
  kRandLbMc3,
};

struct FamilyParams {
  int n = 0;
  int z = 0;
  int variant = 1;
  int delta = 0;
  Rational d = 1;
  Rational d1 = 10;
  Rational d2 = 1;
  Rational d3 = 2;
  Rational beta = Rational(1, 4);
};

std::string_view family_name(Family family);
Family parse_family(std::string_view name);
std::vector<Family> all_families();

Instance gen_family(Family family, const FamilyParams& params);

// Deviation sequence for fig3, fig4, fig7, fig8 and fig9; one agent moves per step.
std::vector<ReplayStep> family_sequence(Family family, const FamilyParams& params);

enum class RandomModel { kUniform, kClustered };
std::string_view model_name(RandomModel model);
RandomModel parse_model(std::string_view name);

// Locations on [0, 1] with denominator dividing 10^6.
Instance gen_random(int n, int z, RandomModel model, std::uint64_t seed);

// Seed of the index-th instance in a stream rooted at base.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// n+1 phantoms: each -inf, +inf or a rational in [-1/2, 3/2].
std::vector<ExtendedRational> random_phantoms(int n, std::uint64_t seed);

enum class PredictionMode { kNone, kPerfect, kUniform, kAdversarial };
std::string_view prediction_mode_name(PredictionMode mode);
PredictionMode parse_prediction_mode(std::string_view name);

// Perfect uses the utilitarian optimum; adversarial picks a point outside the
// profile or an extreme report.
std::optional<Rational> draw_prediction(const Instance& instance, PredictionMode mode,
                                        std::uint64_t seed);

}  // namespace facloc

#endif  // FACLOC_FAMILIES_HPP_
