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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "facloc/error.hpp"
#include "facloc/families.hpp"
#include "facloc/objectives.hpp"
#include "facloc/predictions.hpp"
#include "facloc/verification.hpp"
#include "support/oracles.hpp"

namespace facloc {
namespace {

constexpr auto kU = ObjectiveKind::kUtilitarian;
constexpr auto kE = ObjectiveKind::kEgalitarian;

Instance fig4a() { return Instance({0, 0, Rational(1, 2), 1, 1}, 2); }

TEST_CASE("deterministic audit examples") {
  CHECK_FALSE(check_sp_deterministic(mech::LeftZ{}, fig4a()).has_value());
  CHECK_FALSE(check_sp_deterministic(mech::Phantom{{ExtendedRational::neg_inf(), Rational(1, 3), 1,
                                                    ExtendedRational::pos_inf(), 2, 0}},
                                     fig4a())
                  .has_value());
  auto direct = check_sp_deterministic(mech::Oracle{kE}, fig4a());
  REQUIRE(direct.has_value());
  CHECK(direct->agent_index == 2);
  CHECK(direct->outcome_deviated == ExtendedRational(Rational(1, 2)));
  FamilyParams p{.n = 5, .z = 2, .delta = 1};
  auto cert = check_sp_deterministic(mech::Oracle{kE}, gen_family(Family::kFig4, p));
  REQUIRE(cert.has_value());
  CHECK(cert->cost_deviated < cert->cost_truthful);
  Instance truth = gen_family(Family::kFig4, p);
  Instance lied = truth.with_location(static_cast<std::size_t>(cert->agent_index), cert->deviation);
  CHECK(evaluate(mech::Oracle{kE}, lied).point() == cert->outcome_deviated);
  CHECK(distance(cert->outcome_deviated, cert->true_point) == cert->cost_deviated);
}

TEST_CASE("explicit deviation sets") {
  DeviationSet only_half = {{Rational(1, 2)}};
  CHECK_FALSE(check_sp_deterministic(mech::LeftZ{}, fig4a(), only_half).has_value());
  FamilyParams p{.n = 5, .z = 2, .delta = 1};
  Instance truth = gen_family(Family::kFig4, p);
  auto full = check_sp_deterministic(mech::Oracle{kE}, truth);
  REQUIRE(full.has_value());
  DeviationSet miss = {{Rational(100)}};
  CHECK_FALSE(check_sp_deterministic(mech::Oracle{kE}, truth, miss).has_value());
  DeviationSet hit = {{full->deviation}};
  CHECK(check_sp_deterministic(mech::Oracle{kE}, truth, hit).has_value());
}

TEST_CASE("randomized audit examples") {
  Instance x({0, Rational(1, 3), Rational(2, 3), 1}, 1);
  CHECK_FALSE(check_sp_in_expectation(mech::RandMedian{}, x).has_value());
  Instance moved = x.with_location(0, Rational(-3));
  ExtendedRational before = evaluate(mech::RandMedian{}, x).expected_distance(0);
  ExtendedRational after = evaluate(mech::RandMedian{}, moved).expected_distance(0);
  CHECK(before == after);

  Rule broken = [](const Instance& inst) {
    RandomizedOutcome out;
    Rational a = oracle_mechanism(inst, kU);
    Rational b = left_median(inst);
    if (a == b) return deterministic_outcome(a);
    out.support = {Atom{a, Rational(1, 2)}, Atom{b, Rational(1, 2)}};
    if (b < a) std::swap(out.support[0], out.support[1]);
    return out;
  };
  bool found = false;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200 && !found; ++trial) {
    Instance inst(testing::random_profile(rng, 6, 12), 2);
    found = check_sp_rule(broken, inst).has_value();
  }
  CHECK(found);
}

TEST_CASE("corollary path examples") {
  Instance x({0, Rational(1, 3), Rational(2, 3), 1}, 1);
  CHECK(check_corollary_path(mech::LeftMedian{}, x, 3, 12));
  FamilyParams p{.n = 5, .z = 2};
  for (ReplayStep& step : family_sequence(Family::kFig4, p)) {
    if (step.mover < 0) continue;
    CHECK(check_corollary_path(mech::LeftZ{}, step.instance, step.mover, 8));
  }
  CHECK_THROWS_AS(check_corollary_path(mech::RandMedian{}, x, 0, 4), Error);
}

TEST_CASE("replay keeps strategyproof outcomes and exposes the oracle") {
  FamilyParams p{.n = 5, .z = 2};
  auto steps = family_sequence(Family::kFig4, p);
  ReplayResult lz = replay_sequence(mech::LeftZ{}, steps);
  CHECK(lz.unchanged);
  CHECK(lz.applicable);
  ReplayResult orc = replay_sequence(mech::Oracle{kE}, steps);
  CHECK_FALSE(orc.unchanged);
}

TEST_CASE("measure_ratio examples") {
  RatioReport a = measure_ratio(mech::LeftZ{}, fig4a(), kE);
  CHECK(a.mechanism_cost == ExtendedRational(Rational(1, 2)));
  CHECK(a.opt_cost == Rational(1, 4));
  CHECK(a.ratio == ExtendedRational(2));
  CHECK(a.within_bound);
  FamilyParams p{.n = 8, .z = 3, .variant = 2};
  RatioReport b = measure_ratio(mech::LeftMedian{}, gen_family(Family::kFig6, p), kU);
  CHECK(b.ratio == ExtendedRational(4));
  REQUIRE(b.bound.has_value());
  CHECK(*b.bound == ExtendedRational(f_util(8, 3)));
  CHECK(b.within_bound);
  Instance same({3, 3, 3, 3, 3}, 2);
  for (MechanismSpec s : {MechanismSpec{mech::LeftZ{}}, MechanismSpec{mech::LeftMedian{}}}) {
    CHECK(measure_ratio(s, same, kU).ratio == ExtendedRational(1));
    CHECK(measure_ratio(s, same, kE).ratio == ExtendedRational(1));
  }
  RatioReport degenerate = measure_ratio(deterministic_outcome(Rational(4)), same, kU);
  CHECK(degenerate.ratio == ExtendedRational::pos_inf());
}

TEST_CASE("default grid contains the required points") {
  Instance x({0, Rational(1, 2), 2}, 1, Rational(7));
  auto grid = default_deviation_grid(x, mech::InRange{0});
  auto has = [&](const Rational& v) { return std::binary_search(grid.begin(), grid.end(), v); };
  for (const Rational& v : x.locations()) CHECK(has(v));
  CHECK(has(Rational(1, 4)));
  CHECK(has(Rational(5, 4)));
  CHECK(has(Rational(7)));
  CHECK(grid.front() < Rational(0));
  CHECK(grid.back() > Rational(7));
  CHECK(std::is_sorted(grid.begin(), grid.end()));
}

TEST_CASE("property: strategyproof mechanisms yield no certificate") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    int z = 1 + static_cast<int>(rng() % 2);
    int n = 2 * z + 1 + static_cast<int>(rng() % 4);
    Rational y(static_cast<std::int64_t>(rng() % 30) - 5, 20);
    Instance inst(testing::random_profile(rng, n, 16), z, y);
    std::vector<MechanismSpec> specs = {mech::LeftZ{}, mech::LeftMedian{},
                                        mech::Kth{1 + static_cast<int>(rng() % n)},
                                        mech::Phantom{random_phantoms(n, rng())}, mech::InRange{0},
                                        mech::InRange{gamma_max(n, z)}};
    for (const MechanismSpec& s : specs) REQUIRE_FALSE(check_sp_deterministic(s, inst).has_value());
    if (n % 2 == 0) REQUIRE_FALSE(check_sp_in_expectation(mech::RandMedian{}, inst).has_value());
  }
}

TEST_CASE("property: corollary path holds for phantom-representable mechanisms") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    int z = 1 + static_cast<int>(rng() % 2);
    int n = 2 * z + 1 + static_cast<int>(rng() % 4);
    Instance inst(testing::random_profile(rng, n, 16), z, Rational(1, 3));
    int agent = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    REQUIRE(check_corollary_path(mech::LeftZ{}, inst, agent, 10));
    REQUIRE(check_corollary_path(mech::LeftMedian{}, inst, agent, 10));
    REQUIRE(check_corollary_path(mech::InRange{0}, inst, agent, 10));
    std::vector<ExtendedRational> alphas = random_phantoms(n, rng());
    if (phantom_median(inst, alphas).is_finite()) {
      REQUIRE(check_corollary_path(mech::Phantom{alphas}, inst, agent, 10));
    }
  }
}

TEST_CASE("property: ratios respect the applicable bounds") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 5000; ++trial) {
    int z = 1 + static_cast<int>(rng() % 3);
    int n = 2 * z + 1 + static_cast<int>(rng() % 7);
    Rational y(static_cast<std::int64_t>(rng() % 30) - 5, 20);
    Instance inst(testing::random_profile(rng, n, trial % 2 == 0 ? 6 : 997), z, y);
    REQUIRE(measure_ratio(mech::LeftMedian{}, inst, kU).within_bound);
    REQUIRE(measure_ratio(mech::LeftZ{}, inst, kE).within_bound);
    RatioReport ir = measure_ratio(mech::InRange{0}, inst, kU);
    std::string text;
    for (const Rational& v : inst.sorted().values()) text += v.to_string() + " ";
    INFO("z=", z, " x=", text, " yhat=", y.to_string(), " ratio=", ir.ratio.to_string(),
         " bound=", ir.bound ? ir.bound->to_string() : "none");
    REQUIRE(ir.within_bound);
    if (n % 2 == 0) REQUIRE(measure_ratio(mech::RandMedian{}, inst, kU).within_bound);
    RatioReport r = measure_ratio(mech::LeftMedian{}, inst, kU);
    REQUIRE(r.ratio >= ExtendedRational(1));
  }
}

}  // namespace
}  // namespace facloc
