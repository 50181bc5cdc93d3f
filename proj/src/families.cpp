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

#include "facloc/families.hpp"

#include <algorithm>
#include <random>

#include "facloc/error.hpp"
#include "facloc/objectives.hpp"

namespace facloc {

namespace {

constexpr std::int64_t kGrid = 1000000;

struct Cluster {
  int count;
  Rational at;
};

std::vector<Rational> expand(std::initializer_list<Cluster> clusters) {
  std::vector<Rational> out;
  for (const Cluster& c : clusters) {
    require(c.count >= 0, ErrorKind::kInternal, "negative cluster size");
    out.insert(out.end(), static_cast<std::size_t>(c.count), c.at);
  }
  return out;
}

void check(bool ok, const std::string& what) { require(ok, ErrorKind::kDomain, what); }

void check_fig3(const FamilyParams& p) {
  check(p.n >= 4 && p.z >= (p.n + 1) / 2 && p.z <= p.n - 1, "fig3 needs n >= 4 and ceil(n/2) <= z <= n-1");
}

void check_fig4(const FamilyParams& p) {
  check(p.z >= 1 && p.n >= 2 * p.z + 1, "fig4/fig7 need z >= 1 and n >= 2z+1");
  check(p.delta >= 0 && p.delta <= p.z, "fig4/fig7 need 0 <= delta <= z");
}

void check_fig8(const FamilyParams& p) {
  check(p.z > 1 && p.n >= 2 * p.z + 1 && p.n <= 3 * p.z - 1, "fig8 needs z > 1 and 2z+1 <= n <= 3z-1");
  check(p.delta >= 0 && p.delta <= p.z - 1, "fig8 needs 0 <= delta <= z-1");
  check(p.d.sign() > 0, "fig8 needs d > 0");
}

int fig9_theta(const FamilyParams& p) {
  return (p.n - p.z) % 2 == 1 ? (p.n - p.z - 1) / 2 - p.z : (p.n - p.z) / 2 - p.z;
}

void check_fig9(const FamilyParams& p) {
  check(p.z >= 1 && p.n >= 3 * p.z, "fig9 needs z >= 1 and n >= 3z");
  check(p.d1 > p.d2 + p.d3 && p.d2.sign() > 0 && p.d2 < p.d3, "fig9 needs d1 > d2+d3 and 0 < d2 < d3");
  check(p.delta >= 0 && p.delta <= p.z + fig9_theta(p), "fig9 needs 0 <= delta <= z+theta");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rational grid_point(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> pick(lo, hi);
  return Rational(pick(rng), kGrid);
}

// Moves every agent in `movers` to `target`, one step per agent.
std::vector<ReplayStep> walk(Instance start, const std::vector<int>& movers, const Rational& target) {
  std::vector<ReplayStep> steps;
  steps.push_back(ReplayStep{start, -1});
  for (int m : movers) {
    start = start.with_location(static_cast<std::size_t>(m), target);
    steps.push_back(ReplayStep{start, m});
  }
  return steps;
}

std::vector<int> range(int first, int count) {
  std::vector<int> out(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = first + i;
  return out;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kFig3A: return "fig3a";
    case Family::kFig3B: return "fig3b";
    case Family::kFig4: return "fig4";
    case Family::kFig6: return "fig6";
    case Family::kFig7: return "fig7";
    case Family::kFig8: return "fig8";
    case Family::kFig9: return "fig9";
    case Family::kFig10: return "fig10";
    case Family::kRandLbSc4: return "rand_lb_sc4";
    case Family::kRandLbSc5: return "rand_lb_sc5";
    case Family::kRandLbMc3: return "rand_lb_mc3";
  }
  return "unknown";
}

std::vector<Family> all_families() {
  return {Family::kFig3A, Family::kFig3B, Family::kFig4,      Family::kFig6,
          Family::kFig7,  Family::kFig8,  Family::kFig9,      Family::kFig10,
          Family::kRandLbSc4, Family::kRandLbSc5, Family::kRandLbMc3};
}

Family parse_family(std::string_view name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  fail(ErrorKind::kInvalidInput, "unknown family '" + std::string(name) + "'");
}

Instance gen_family(Family family, const FamilyParams& p) {
  const Rational half(1, 2);
  switch (family) {
    case Family::kFig3A: {
      check_fig3(p);
      int h = p.n / 2;
      return Instance(expand({{h, 0}, {p.n - 2 * h, 1}, {h, 2}}), p.z);
    }
    case Family::kFig3B: {
      check_fig3(p);
      int h = p.n / 2;
      std::vector<Rational> x = expand({{h, 0}, {p.n - 2 * h, 1}, {p.n - p.z - 1, 2}});
      int spread = p.z + h - p.n + 1;
      for (int j = 0; j < spread; ++j) x.emplace_back(3 + j);
      return Instance(std::move(x), p.z);
    }
    case Family::kFig4:
    case Family::kFig7: {
      check_fig4(p);
      Instance inst(expand({{p.z, 0}, {p.n - 2 * p.z + p.delta, half}, {p.z - p.delta, 1}}), p.z);
      if (family == Family::kFig4) return inst;
      check(p.variant == 1 || p.variant == 2, "fig7 variant must be 1 or 2");
      return inst.with_prediction(p.variant == 1 ? Rational(1, 4) : Rational(3, 4));
    }
    case Family::kFig6: {
      check(mechanism_feasible(p.n, p.z), "fig6 needs n >= 3 and 1 <= z <= floor((n-1)/2)");
      check(p.d.sign() > 0, "fig6 needs d > 0");
      int mid = (p.n - 2 * p.z + 1) / 2;
      int half_n = p.n / 2;
      Rational two_d = p.d * Rational(2);
      switch (p.variant) {
        case 1: return Instance(expand({{p.z, 0}, {p.n - p.z, p.d}}), p.z);
        case 2: return Instance(expand({{p.z, 0}, {mid, p.d}, {half_n, two_d}}), p.z);
        case 3: return Instance(expand({{half_n, 0}, {mid, p.d}, {p.z, two_d}}), p.z);
        case 4: return Instance(expand({{p.n - p.z, 0}, {p.z, p.d}}), p.z);
        default: fail(ErrorKind::kDomain, "fig6 variant must be 1..4");
      }
    }
    case Family::kFig8: {
      check_fig8(p);
      Rational zd = p.d * Rational(p.z);
      Rational top = p.d * Rational(p.z + 1);
      return Instance(expand({{p.z - p.delta, 0}, {p.n - 2 * p.z + p.delta, zd}, {p.z, top}}), p.z, top);
    }
    case Family::kFig9: {
      check_fig9(p);
      int theta = fig9_theta(p);
      int second = (p.n - p.z) % 2 == 1 ? p.z + p.delta : p.z - 1 + p.delta;
      Rational b = p.d1;
      Rational c = p.d1 + p.d2;
      Rational e = c + p.d3;
      return Instance(expand({{p.z + theta - p.delta, 0}, {second, b}, {1 + theta, c}, {p.z, e}}), p.z, c);
    }
    case Family::kFig10:
      return Instance(expand({{3, 0}, {1, Rational(9, 10)}, {4, Rational(19, 10)}}), 3, Rational(0));
    case Family::kRandLbSc4:
      check(p.variant == 1 || p.variant == 2, "rand_lb_sc4 variant must be 1 or 2");
      return Instance({0, Rational(1, 3), Rational(2, 3), p.variant == 1 ? Rational(1) : Rational(2, 3)}, 1);
    case Family::kRandLbSc5:
      check(p.variant == 1 || p.variant == 2, "rand_lb_sc5 variant must be 1 or 2");
      return Instance({0, Rational(1, 3), half, Rational(2, 3), p.variant == 1 ? Rational(1) : Rational(2, 3)},
                      2);
    case Family::kRandLbMc3:
      check(p.variant == 1 || p.variant == 2, "rand_lb_mc3 variant must be 1 or 2");
      check(p.beta.sign() > 0 && p.beta < half, "rand_lb_mc3 needs 0 < beta < 1/2");
      return Instance({p.variant == 1 ? Rational(0) : p.beta, half, 1}, 1);
  }
  fail(ErrorKind::kInternal, "unhandled family");
}

std::vector<ReplayStep> family_sequence(Family family, const FamilyParams& params) {
  FamilyParams p = params;
  p.delta = 0;
  switch (family) {
    case Family::kFig3A:
    case Family::kFig3B: {
      check_fig3(p);
      Instance start = gen_family(Family::kFig3B, p);
      int spread = p.z + p.n / 2 - p.n + 1;
      return walk(start, range(p.n - spread, spread), Rational(2));
    }
    case Family::kFig4:
    case Family::kFig7: {
      check_fig4(p);
      Instance start = gen_family(family, p);
      return walk(start, range(p.n - p.z, p.z), Rational(1, 2));
    }
    case Family::kFig8: {
      check_fig8(p);
      Instance start = gen_family(family, p);
      return walk(start, range(0, p.z - 1), p.d * Rational(p.z));
    }
    case Family::kFig9: {
      check_fig9(p);
      Instance start = gen_family(family, p);
      return walk(start, range(0, p.z + fig9_theta(p)), p.d1);
    }
    default:
      fail(ErrorKind::kDomain, "no deviation sequence for family " + std::string(family_name(family)));
  }
}

std::string_view model_name(RandomModel model) {
  return model == RandomModel::kUniform ? "uniform" : "clustered";
}

RandomModel parse_model(std::string_view name) {
  if (name == "uniform") return RandomModel::kUniform;
  if (name == "clustered") return RandomModel::kClustered;
  fail(ErrorKind::kInvalidInput, "unknown random model '" + std::string(name) + "'");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ (index * 0xd1b54a32d192ed03ULL));
}

Instance gen_random(int n, int z, RandomModel model, std::uint64_t seed) {
  require(mechanism_feasible(n, z), ErrorKind::kDomain,
          "gen_random needs n >= 3 and 1 <= z <= floor((n-1)/2)");
  std::mt19937_64 rng(seed);
  std::vector<Rational> x;
  x.reserve(static_cast<std::size_t>(n));
  if (model == RandomModel::kUniform) {
    for (int i = 0; i < n; ++i) x.push_back(grid_point(rng, 0, kGrid));
  } else {
    std::uniform_int_distribution<std::int64_t> atom_pick(0, kGrid);
    std::int64_t atoms[3] = {atom_pick(rng), atom_pick(rng), atom_pick(rng)};
    std::uniform_int_distribution<int> which(0, 2);
    std::uniform_int_distribution<std::int64_t> jitter(-100, 100);
    for (int i = 0; i < n; ++i) {
      std::int64_t v = atoms[which(rng)] + jitter(rng);
      x.emplace_back(std::clamp<std::int64_t>(v, 0, kGrid), kGrid);
    }
  }
  return Instance(std::move(x), z);
}

std::vector<ExtendedRational> random_phantoms(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 3);
  std::vector<ExtendedRational> alphas;
  for (int i = 0; i <= n; ++i) {
    switch (kind(rng)) {
      case 0: alphas.push_back(ExtendedRational::neg_inf()); break;
      case 1: alphas.push_back(ExtendedRational::pos_inf()); break;
      default: alphas.emplace_back(grid_point(rng, -kGrid / 2, kGrid + kGrid / 2));
    }
  }
  return alphas;
}

std::string_view prediction_mode_name(PredictionMode mode) {
  switch (mode) {
    case PredictionMode::kNone: return "none";
    case PredictionMode::kPerfect: return "perfect";
    case PredictionMode::kUniform: return "uniform";
    case PredictionMode::kAdversarial: return "adversarial";
  }
  return "none";
}

PredictionMode parse_prediction_mode(std::string_view name) {
  for (PredictionMode m : {PredictionMode::kNone, PredictionMode::kPerfect, PredictionMode::kUniform,
                           PredictionMode::kAdversarial}) {
    if (prediction_mode_name(m) == name) return m;
  }
  fail(ErrorKind::kInvalidInput, "unknown prediction mode '" + std::string(name) + "'");
}

std::optional<Rational> draw_prediction(const Instance& instance, PredictionMode mode,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed ^ 0x5bd1e995ULL));
  const auto& s = instance.sorted();
  switch (mode) {
    case PredictionMode::kNone: return std::nullopt;
    case PredictionMode::kPerfect: return opt_utilitarian(instance).location;
    case PredictionMode::kUniform: return grid_point(rng, 0, kGrid);
    case PredictionMode::kAdversarial: {
      std::uniform_int_distribution<int> pick(0, 3);
      switch (pick(rng)) {
        case 0: return s.at(1) - Rational(10);
        case 1: return s.at(s.size()) + Rational(10);
        case 2: return s.at(1);
        default: return s.at(s.size());
      }
    }
  }
  return std::nullopt;
}

}  // namespace facloc
