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

// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "facloc/error.hpp"
#include "facloc/families.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/objectives.hpp"
#include "facloc/predictions.hpp"
#include "facloc/reproduce.hpp"
#include "facloc/sweep.hpp"
#include "facloc/verification.hpp"

#include "json.hpp"

namespace {

using namespace facloc;

constexpr auto kU = ObjectiveKind::kUtilitarian;
constexpr auto kE = ObjectiveKind::kEgalitarian;
constexpr std::uint64_t kSeed = 20260401;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && pass_) {
      pass_ = false;
      first_ = what;
    }
  }
  bool pass() const { return pass_; }
  const std::string& first_failure() const { return first_; }

 private:
  bool pass_ = true;
  std::string first_;
};

std::string profile_text(const Instance& inst) {
  std::string s = "z=" + std::to_string(inst.z()) + " x=(";
  for (std::size_t i = 0; i < inst.locations().size(); ++i) {
    if (i != 0) s += ",";
    s += inst.locations()[i].to_string();
  }
  s += ")";
  if (inst.prediction()) s += " yhat=" + inst.prediction()->to_string();
  return s;
}

// Mix of continuous and heavily tied profiles.
Instance audit_instance(int n, int z, std::uint64_t index, std::optional<Rational> prediction) {
  std::uint64_t seed = derive_seed(kSeed, index);
  Instance base = [&] {
    switch (index % 3) {
      case 0: return gen_random(n, z, RandomModel::kUniform, seed);
      case 1: return gen_random(n, z, RandomModel::kClustered, seed);
      default: {
        std::mt19937_64 rng(seed);
        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) x.emplace_back(static_cast<std::int64_t>(rng() % 9), 8);
        return Instance(std::move(x), z);
      }
    }
  }();
  return base.with_prediction(prediction);
}

Outcome criterion1() {
  Checker c;
  auto rows = reproduce_figure1(10000, kSeed, 1);
  int pairs = 0;
  for (const FrontierRow& r : rows) {
    ++pairs;
    c.expect(r.attained == ExtendedRational(r.f),
             "n=" + std::to_string(r.n) + " z=" + std::to_string(r.z) + " attained " + r.attained.to_string());
    c.expect(r.sweep_max <= ExtendedRational(r.f),
             "n=" + std::to_string(r.n) + " z=" + std::to_string(r.z) + " sweep max " + r.sweep_max.to_string());
  }
  c.expect(pairs == 3 + 5 + 7 + 9, "unexpected frontier size " + std::to_string(pairs));
  return {c.pass(), c.pass() ? std::to_string(pairs) + " (n,z) pairs exact, 10^4 sweeps each"
                              : c.first_failure()};
}

Outcome criterion2() {
  Checker c;
  ExtendedRational worst(0);
  std::int64_t total = 0;
  for (auto [n, z] : {std::pair{5, 2}, std::pair{7, 3}, std::pair{9, 4}}) {
    SweepConfig cfg;
    cfg.mechanism = mech::LeftZ{};
    cfg.objective = kE;
    cfg.n = n;
    cfg.z = z;
    cfg.seed = derive_seed(kSeed, static_cast<std::uint64_t>(n));
    cfg.count = 100000;
    SweepReport r = sweep(cfg);
    total += r.count;
    worst = std::max(worst, r.max_ratio);
    c.expect(r.max_ratio <= ExtendedRational(2), "(" + std::to_string(n) + "," + std::to_string(z) +
                                                     ") max ratio " + r.max_ratio.to_string());
  }
  RatioReport tight = measure_ratio(mech::LeftZ{}, gen_family(Family::kFig4, FamilyParams{.n = 5, .z = 2}), kE);
  c.expect(tight.ratio == ExtendedRational(2), "fig4 ratio " + tight.ratio.to_string());
  return {c.pass(), c.pass() ? std::to_string(total) + " instances, max " + worst.to_string() +
                                   ", fig4 attains " + tight.ratio.to_string()
                             : c.first_failure()};
}

Outcome criterion3() {
  Checker c;
  std::mt19937_64 rng(kSeed + 3);
  std::int64_t probes = 0;
  int instances = 0;
  for (int t = 0; t < 2000; ++t) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) {
      // Alternate coarse grids (ties) with fine ones.
      std::int64_t den = t % 2 == 0 ? 4 : 997;
      x.emplace_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(3 * den)), den);
    }
    for (int z = 0; z < n; ++z) {
      Instance inst(x, z);
      ++instances;
      for (ObjectiveKind obj : {kU, kE}) {
        OptimalSolution fast = solve(inst, obj);
        OptimalSolution brute = brute_force_opt(inst, obj);
        c.expect(fast.cost == brute.cost, "opt mismatch on " + profile_text(inst));
        c.expect(brute.contiguous, "non-contiguous winner on " + profile_text(inst));
        for (int p = 0; p < 25; ++p) {
          Rational y(static_cast<std::int64_t>(rng() % 400) - 100, 100);
          ++probes;
          c.expect(eval_cost(inst, y, obj).cost == eval_oracle(inst, y, obj),
                   "eval mismatch at " + y.to_string() + " on " + profile_text(inst));
        }
      }
    }
  }
  return {c.pass(), c.pass() ? "2000 profiles, " + std::to_string(instances) + " (profile,z) instances, " +
                                   std::to_string(probes) + " probes"
                             : c.first_failure()};
}

Outcome criterion4() {
  Checker c;
  constexpr int kPerConfig = 10000;
  int configs = 0;
  std::int64_t audits = 0;
  auto audit = [&](const std::string& label, int n, int z,
                   const std::function<MechanismSpec(std::uint64_t)>& spec_for,
                   const std::function<std::optional<Rational>(std::uint64_t)>& prediction_for) {
    ++configs;
    for (std::uint64_t i = 0; i < kPerConfig; ++i) {
      Instance inst = audit_instance(n, z, i, prediction_for(i));
      MechanismSpec spec = spec_for(i);
      ++audits;
      auto cert = check_sp_deterministic(spec, inst);
      c.expect(!cert.has_value(), label + " violation on " + profile_text(inst));
      if (cert) return;
    }
  };
  auto none = [](std::uint64_t) { return std::optional<Rational>(); };
  for (auto [n, z] : {std::pair{7, 2}, std::pair{8, 3}}) {
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(z) + ") ";
    audit(tag + "left_z", n, z, [](std::uint64_t) { return MechanismSpec{mech::LeftZ{}}; }, none);
    audit(tag + "left_median", n, z, [](std::uint64_t) { return MechanismSpec{mech::LeftMedian{}}; }, none);
    for (int k = 1; k <= n; ++k) {
      audit(tag + "kth:" + std::to_string(k), n, z, [k](std::uint64_t) { return MechanismSpec{mech::Kth{k}}; },
            none);
    }
    std::vector<MechanismSpec> phantoms;
    for (std::uint64_t v = 0; v < 20; ++v) {
      phantoms.push_back(mech::Phantom{random_phantoms(n, derive_seed(kSeed + 4, v))});
    }
    audit(tag + "phantom", n, z, [&](std::uint64_t i) { return phantoms[i % 20]; }, none);
    std::vector<Rational> predictions;
    for (int v = 0; v < 20; ++v) predictions.emplace_back(v - 4, 12);
    for (int g = 0; g <= gamma_max(n, z); ++g) {
      audit(tag + "in_range:" + std::to_string(g), n, z, [g](std::uint64_t) { return MechanismSpec{mech::InRange{g}}; },
            [&](std::uint64_t i) { return std::optional<Rational>(predictions[i % 20]); });
    }
  }
  int certificates = 0;
  for (int n : {5, 7, 9}) {
    int z = (n - 1) / 2;
    for (int delta = 0; delta <= z; ++delta) {
      Instance inst = gen_family(Family::kFig4, FamilyParams{.n = n, .z = z, .delta = delta});
      if (check_sp_deterministic(mech::Oracle{kE}, inst)) ++certificates;
    }
  }
  c.expect(certificates > 0, "oracle produced no certificate on the fig4 family");
  return {c.pass(), c.pass() ? std::to_string(configs) + " configurations, " + std::to_string(audits) +
                                   " audits clean; oracle certificates on fig4: " + std::to_string(certificates)
                             : c.first_failure()};
}

Outcome criterion5() {
  Checker c;
  for (auto [n, z] : {std::pair{4, 1}, std::pair{6, 2}, std::pair{8, 3}}) {
    SweepConfig cfg;
    cfg.mechanism = mech::RandMedian{};
    cfg.n = n;
    cfg.z = z;
    cfg.seed = derive_seed(kSeed + 5, static_cast<std::uint64_t>(n));
    cfg.count = 10000;
    SweepReport r = sweep(cfg);
    c.expect(r.max_ratio <= ExtendedRational(f_rand(n, z)),
             "(" + std::to_string(n) + "," + std::to_string(z) + ") max " + r.max_ratio.to_string());
  }
  Instance cal = gen_family(Family::kFig6, FamilyParams{.n = 4, .z = 1, .variant = 2});
  RatioReport r = measure_ratio(mech::RandMedian{}, cal, kU);
  c.expect(r.ratio == ExtendedRational(Rational(3, 2)), "calibration ratio " + r.ratio.to_string());
  return {c.pass(), c.pass() ? "3 x 10^4 instances within f_rand; " + profile_text(cal) + " gives " +
                                   r.ratio.to_string()
                             : c.first_failure()};
}

Outcome criterion6() {
  Checker c;
  std::vector<std::pair<int, int>> sizes = {{3, 1}, {7, 2}, {9, 3}, {10, 3}, {12, 4}};
  for (auto [n, z] : sizes) {
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(z) + ")";
    SweepConfig perfect;
    perfect.mechanism = mech::InRange{0};
    perfect.n = n;
    perfect.z = z;
    perfect.prediction = PredictionMode::kPerfect;
    perfect.seed = derive_seed(kSeed + 6, static_cast<std::uint64_t>(n * 16 + z));
    perfect.count = 10000;
    SweepReport p = sweep(perfect);
    c.expect(p.max_ratio == ExtendedRational(1), tag + " perfect max " + p.max_ratio.to_string());

    SweepConfig adversarial = perfect;
    adversarial.prediction = PredictionMode::kAdversarial;
    SweepReport a = sweep(adversarial);
    c.expect(a.max_ratio <= ExtendedRational(f_robust(n, z)), tag + " adversarial max " + a.max_ratio.to_string());
  }
  std::string attained;
  for (auto [n, z] : {std::pair{9, 3}, std::pair{10, 3}}) {
    FamilyParams fp{.n = n, .z = z, .d1 = 10, .d2 = 1, .d3 = 2};
    int theta = (n - z) % 2 == 1 ? (n - z - 1) / 2 - z : (n - z) / 2 - z;
    fp.delta = z + theta;
    Instance inst = gen_family(Family::kFig9, fp);
    RatioReport r = measure_ratio(mech::InRange{0}, inst, kU);
    c.expect(r.ratio == ExtendedRational(f_robust(n, z)),
             "fig9 (" + std::to_string(n) + "," + std::to_string(z) + ") ratio " + r.ratio.to_string());
    attained += " " + r.ratio.to_string();
  }
  return {c.pass(), c.pass() ? "perfect = 1, adversarial within f_robust, fig9 attains" + attained
                             : c.first_failure()};
}

Outcome criterion7() {
  ReproduceOutput out = reproduce("example-5-2-2", 0, kSeed, 1, -1);
  auto doc = nlohmann::json::parse(out.text);
  std::vector<std::string> triple = doc.at("triple").get<std::vector<std::string>>();
  bool ok = out.ok && triple == std::vector<std::string>{"1", "14/5", "37/10"};
  std::string shown = "(" + triple.at(0) + ", " + triple.at(1) + ", " + triple.at(2) + ")";
  return {ok, shown};
}

Outcome criterion8() {
  Checker c;
  int replays = 0;
  auto replay = [&](const std::string& label, const MechanismSpec& spec, Family family, const FamilyParams& p) {
    ReplayResult r = replay_sequence(spec, family_sequence(family, p));
    ++replays;
    c.expect(r.applicable && r.unchanged,
             label + " " + mechanism_label(spec) + " n=" + std::to_string(p.n) + " z=" + std::to_string(p.z) +
                 (r.applicable ? " changed at step " + std::to_string(r.first_change) : " not applicable"));
  };
  for (auto [n, z] : {std::pair{4, 2}, std::pair{6, 4}, std::pair{7, 4}, std::pair{9, 6}, std::pair{10, 5}}) {
    FamilyParams p{.n = n, .z = z};
    replay("fig3", mech::LeftMedian{}, Family::kFig3A, p);
    for (int k = 1; k <= n / 2; ++k) replay("fig3", mech::Kth{k}, Family::kFig3A, p);
  }
  for (auto [n, z] : {std::pair{5, 2}, std::pair{7, 3}, std::pair{9, 4}}) {
    for (int variant : {1, 2}) {
      FamilyParams p{.n = n, .z = z, .variant = variant};
      replay("fig7", mech::LeftZ{}, Family::kFig7, p);
      for (int g = 0; g <= gamma_max(n, z); ++g) replay("fig7", mech::InRange{g}, Family::kFig7, p);
    }
  }
  for (auto [n, z] : {std::pair{7, 3}, std::pair{8, 3}, std::pair{10, 4}, std::pair{11, 4}}) {
    FamilyParams p{.n = n, .z = z};
    replay("fig8", mech::InRange{0}, Family::kFig8, p);
    replay("fig8", mech::LeftZ{}, Family::kFig8, p);
  }
  return {c.pass(), c.pass() ? std::to_string(replays) + " replays unchanged" : c.first_failure()};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    Outcome (*run)();
    double limit_seconds;
  };
  const Entry entries[] = {
      {1, "frontier n/(n-2z) exact and unbeaten", criterion1, 30},
      {2, "egalitarian left_z within 2, tight on fig4", criterion2, 60},
      {3, "solvers match brute force", criterion3, 120},
      {4, "strategyproofness suite", criterion4, 300},
      {5, "rand_median within f_rand, 3/2 calibration", criterion5, 0},
      {6, "prediction consistency and robustness", criterion6, 0},
      {7, "worked example triple", criterion7, 0},
      {8, "deviation-sequence replays", criterion8, 0},
  };
  int failed = 0;
  for (const Entry& e : entries) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.run();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.limit_seconds > 0 && seconds > e.limit_seconds) {
      out.pass = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(e.limit_seconds)) + " s limit)";
    }
    if (!out.pass) ++failed;
    std::printf("criterion %d: %s - %s: %s [%.1f s]\n", e.id, out.pass ? "PASS" : "FAIL", e.title,
                out.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
