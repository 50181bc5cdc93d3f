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

#include "facloc/facloc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "facloc/error.hpp"
#include "facloc/families.hpp"
#include "facloc/instance.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/objectives.hpp"
#include "facloc/predictions.hpp"
#include "facloc/reproduce.hpp"
#include "facloc/sweep.hpp"
#include "facloc/verification.hpp"
#include "json.hpp"

struct facloc_instance {
  facloc::Instance value;
  std::optional<facloc::ObjectiveKind> objective;
};

struct facloc_mechanism {
  facloc::MechanismSpec value;
};

namespace {

using nlohmann::json;
using facloc::ExtendedRational;
using facloc::Rational;

thread_local std::string g_last_error;

facloc_status status_for(facloc::ErrorKind kind) {
  switch (kind) {
    case facloc::ErrorKind::kInvalidInput: return FACLOC_ERR_INVALID_INPUT;
    case facloc::ErrorKind::kDomain: return FACLOC_ERR_DOMAIN;
    case facloc::ErrorKind::kLimit: return FACLOC_ERR_LIMIT;
    case facloc::ErrorKind::kInternal: return FACLOC_ERR_INTERNAL;
  }
  return FACLOC_ERR_INTERNAL;
}

template <class F>
facloc_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return FACLOC_OK;
  } catch (const facloc::Error& e) {
    g_last_error = e.what();
    return status_for(e.kind());
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return FACLOC_ERR_INVALID_INPUT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FACLOC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FACLOC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) {
    throw facloc::Error(facloc::ErrorKind::kInvalidInput, std::string(name) + " is null");
  }
}

#define FACLOC_NEED(p)                                 \
  do {                                                 \
    if ((p) == nullptr) {                              \
      g_last_error = #p " is null";                    \
      return FACLOC_ERR_NULL_ARGUMENT;                 \
    }                                                  \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

facloc::ObjectiveKind kind_of(facloc_objective o) {
  if (o == FACLOC_UTILITARIAN) return facloc::ObjectiveKind::kUtilitarian;
  if (o == FACLOC_EGALITARIAN) return facloc::ObjectiveKind::kEgalitarian;
  throw facloc::Error(facloc::ErrorKind::kInvalidInput, "unknown objective code");
}

std::string show(const ExtendedRational& q, int digits) {
  return digits < 0 ? q.to_string() : q.to_decimal(digits);
}

json window_json(const facloc::Window& w) { return json{{"z_left", w.z_left}, {"z_right", w.z_right}}; }

json solution_json(const facloc::OptimalSolution& s, int digits, bool brute) {
  json doc;
  doc["location"] = show(s.location, digits);
  doc["cost"] = show(s.cost, digits);
  doc["window"] = window_json(s.window);
  doc["alternates"] = json::array();
  for (const Rational& a : s.alternates) doc["alternates"].push_back(show(a, digits));
  if (brute) doc["contiguous"] = s.contiguous;
  return doc;
}

json outcome_json(const facloc::RandomizedOutcome& o, int digits) {
  json support = json::array();
  for (const facloc::Atom& a : o.support) {
    support.push_back(json{{"location", show(a.location, digits)}, {"probability", show(a.probability, digits)}});
  }
  return support;
}

json ratio_json(const facloc::RatioReport& r, int digits) {
  json doc;
  doc["mech_cost"] = show(r.mechanism_cost, digits);
  doc["opt_cost"] = show(r.opt_cost, digits);
  doc["ratio"] = show(r.ratio, digits);
  doc["bound"] = r.bound ? json(show(*r.bound, digits)) : json(nullptr);
  doc["within_bound"] = r.within_bound;
  return doc;
}

json certificate_json(const facloc::ViolationCertificate& c, int digits) {
  return json{{"agent_index", c.agent_index},
              {"true_point", show(c.true_point, digits)},
              {"deviation", show(c.deviation, digits)},
              {"outcome_truthful", show(c.outcome_truthful, digits)},
              {"outcome_deviated", show(c.outcome_deviated, digits)},
              {"cost_truthful", show(c.cost_truthful, digits)},
              {"cost_deviated", show(c.cost_deviated, digits)}};
}

Rational rational_field(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw facloc::Error(facloc::ErrorKind::kInvalidInput, "expected a rational literal, got " + v.dump());
}

facloc::FamilyParams family_params(const char* params_json) {
  facloc::FamilyParams p;
  if (params_json == nullptr || *params_json == '\0') return p;
  json doc = json::parse(params_json);
  facloc::require(doc.is_object(), facloc::ErrorKind::kInvalidInput, "family params must be an object");
  if (doc.contains("n")) p.n = doc["n"].get<int>();
  if (doc.contains("z")) p.z = doc["z"].get<int>();
  if (doc.contains("variant")) p.variant = doc["variant"].get<int>();
  if (doc.contains("delta")) p.delta = doc["delta"].get<int>();
  if (doc.contains("d")) p.d = rational_field(doc["d"]);
  if (doc.contains("d1")) p.d1 = rational_field(doc["d1"]);
  if (doc.contains("d2")) p.d2 = rational_field(doc["d2"]);
  if (doc.contains("d3")) p.d3 = rational_field(doc["d3"]);
  if (doc.contains("beta")) p.beta = rational_field(doc["beta"]);
  return p;
}

facloc::MechanismSpec mechanism_field(const json& v) {
  if (v.is_string()) return facloc::parse_mechanism_arg(v.get<std::string>());
  return facloc::parse_mechanism(v.dump());
}

}  // namespace

extern "C" {

const char* facloc_version(void) { return "1.0.0"; }

const char* facloc_last_error(void) { return g_last_error.c_str(); }

void facloc_string_free(char* s) { std::free(s); }

facloc_status facloc_parse_objective(const char* name, facloc_objective* out) {
  FACLOC_NEED(name);
  FACLOC_NEED(out);
  return guarded([&] {
    *out = facloc::parse_objective(name) == facloc::ObjectiveKind::kUtilitarian ? FACLOC_UTILITARIAN
                                                                                : FACLOC_EGALITARIAN;
  });
}

facloc_status facloc_instance_parse(const char* text, facloc_instance** out) {
  FACLOC_NEED(text);
  FACLOC_NEED(out);
  return guarded([&] {
    facloc::ParsedInstance parsed = facloc::parse_instance(text);
    *out = new facloc_instance{std::move(parsed.instance), parsed.objective};
  });
}

facloc_status facloc_instance_create(const char* const* locations, size_t n, int z,
                                     const char* prediction, facloc_instance** out) {
  FACLOC_NEED(out);
  return guarded([&] {
    need(locations, "locations");
    std::vector<Rational> xs;
    for (size_t i = 0; i < n; ++i) {
      need(locations[i], "location");
      xs.push_back(Rational::parse(locations[i]));
    }
    std::optional<Rational> pred;
    if (prediction != nullptr) pred = Rational::parse(prediction);
    *out = new facloc_instance{facloc::Instance(std::move(xs), z, pred), std::nullopt};
  });
}

void facloc_instance_free(facloc_instance* instance) { delete instance; }

facloc_status facloc_instance_size(const facloc_instance* instance, int* n) {
  FACLOC_NEED(instance);
  FACLOC_NEED(n);
  *n = instance->value.n();
  return FACLOC_OK;
}

facloc_status facloc_instance_outliers(const facloc_instance* instance, int* z) {
  FACLOC_NEED(instance);
  FACLOC_NEED(z);
  *z = instance->value.z();
  return FACLOC_OK;
}

facloc_status facloc_instance_set_outliers(facloc_instance* instance, int z) {
  FACLOC_NEED(instance);
  return guarded([&] { instance->value = instance->value.with_outliers(z); });
}

facloc_status facloc_instance_set_prediction(facloc_instance* instance, const char* prediction) {
  FACLOC_NEED(instance);
  return guarded([&] {
    std::optional<Rational> pred;
    if (prediction != nullptr) pred = Rational::parse(prediction);
    instance->value = instance->value.with_prediction(pred);
  });
}

facloc_status facloc_instance_objective(const facloc_instance* instance, int* has,
                                        facloc_objective* objective) {
  FACLOC_NEED(instance);
  FACLOC_NEED(has);
  FACLOC_NEED(objective);
  *has = instance->objective.has_value() ? 1 : 0;
  *objective = instance->objective == facloc::ObjectiveKind::kEgalitarian ? FACLOC_EGALITARIAN
                                                                          : FACLOC_UTILITARIAN;
  return FACLOC_OK;
}

facloc_status facloc_instance_to_json(const facloc_instance* instance, char** out) {
  FACLOC_NEED(instance);
  FACLOC_NEED(out);
  return guarded([&] { *out = dup_string(facloc::instance_to_json(instance->value, instance->objective)); });
}

facloc_status facloc_mechanism_parse(const char* text, facloc_mechanism** out) {
  FACLOC_NEED(text);
  FACLOC_NEED(out);
  return guarded([&] { *out = new facloc_mechanism{facloc::parse_mechanism_arg(text)}; });
}

void facloc_mechanism_free(facloc_mechanism* mechanism) { delete mechanism; }

facloc_status facloc_mechanism_to_json(const facloc_mechanism* mechanism, char** out) {
  FACLOC_NEED(mechanism);
  FACLOC_NEED(out);
  return guarded([&] { *out = dup_string(facloc::mechanism_to_json(mechanism->value)); });
}

facloc_status facloc_eval_cost(const facloc_instance* instance, const char* y,
                               facloc_objective objective, int digits, char** out) {
  FACLOC_NEED(instance);
  FACLOC_NEED(y);
  FACLOC_NEED(out);
  return guarded([&] {
    facloc::Evaluation e = facloc::eval_cost(instance->value, Rational::parse(y), kind_of(objective));
    json doc{{"cost", show(e.cost, digits)}, {"window", window_json(e.window)}};
    *out = dup_string(doc.dump());
  });
}

facloc_status facloc_solve(const facloc_instance* instance, facloc_objective objective,
                           int brute_force, int digits, char** out) {
  FACLOC_NEED(instance);
  FACLOC_NEED(out);
  return guarded([&] {
    facloc::ObjectiveKind kind = kind_of(objective);
    facloc::OptimalSolution s = brute_force ? facloc::brute_force_opt(instance->value, kind)
                                            : facloc::solve(instance->value, kind);
    json doc = solution_json(s, digits, brute_force != 0);
    doc["objective"] = std::string(facloc::objective_name(kind));
    *out = dup_string(doc.dump());
  });
}

facloc_status facloc_run(const facloc_mechanism* mechanism, const facloc_instance* instance,
                         facloc_objective objective, int digits, char** out, int* within_bound) {
  FACLOC_NEED(mechanism);
  FACLOC_NEED(instance);
  FACLOC_NEED(out);
  return guarded([&] {
    const facloc::Instance& inst = instance->value;
    facloc::ObjectiveKind kind = kind_of(objective);
    facloc::RandomizedOutcome outcome = facloc::evaluate(mechanism->value, inst);
    facloc::RatioReport r = facloc::measure_ratio(mechanism->value, inst, kind);
    json doc = ratio_json(r, digits);
    doc["mechanism"] = json::parse(facloc::mechanism_to_json(mechanism->value));
    doc["objective"] = std::string(facloc::objective_name(kind));
    doc["outcome"] = outcome_json(outcome, digits);
    if (outcome.is_deterministic()) doc["location"] = show(outcome.point(), digits);
    if (inst.prediction()) {
      doc["prediction"] = show(*inst.prediction(), digits);
      doc["eta"] = show(facloc::prediction_error(inst, *inst.prediction(), kind).value, digits);
    }
    if (outcome.is_deterministic() && outcome.point().is_finite()) {
      facloc::DeltaIndices d = facloc::delta_index(inst, outcome.point().value());
      doc["delta"] = json{{"i_opt", d.i_opt}, {"i_mech", d.i_mech}, {"delta", d.delta}};
    }
    if (within_bound != nullptr) *within_bound = r.within_bound ? 1 : 0;
    *out = dup_string(doc.dump());
  });
}

facloc_status facloc_verify_sp(const facloc_mechanism* mechanism, const facloc_instance* instance,
                               int digits, char** out, int* violation_found) {
  FACLOC_NEED(mechanism);
  FACLOC_NEED(instance);
  FACLOC_NEED(out);
  return guarded([&] {
    const auto& spec = mechanism->value;
    auto cert = facloc::is_randomized(spec) ? facloc::check_sp_in_expectation(spec, instance->value)
                                            : facloc::check_sp_deterministic(spec, instance->value);
    json doc;
    doc["mechanism"] = json::parse(facloc::mechanism_to_json(spec));
    doc["grid_size"] = facloc::default_deviation_grid(instance->value, spec).size();
    doc["violation"] = cert ? certificate_json(*cert, digits) : json(nullptr);
    if (violation_found != nullptr) *violation_found = cert ? 1 : 0;
    *out = dup_string(doc.dump());
  });
}

facloc_status facloc_sweep(const char* config_json, int digits, char** json_out, char** csv_out,
                           int* all_ok) {
  FACLOC_NEED(config_json);
  FACLOC_NEED(json_out);
  return guarded([&] {
    json doc = json::parse(config_json);
    facloc::require(doc.is_object(), facloc::ErrorKind::kInvalidInput, "sweep config must be an object");
    facloc::SweepConfig c;
    if (doc.contains("mech")) c.mechanism = mechanism_field(doc["mech"]);
    if (doc.contains("objective")) c.objective = facloc::parse_objective(doc["objective"].get<std::string>());
    if (doc.contains("n")) c.n = doc["n"].get<int>();
    if (doc.contains("z")) c.z = doc["z"].get<int>();
    if (doc.contains("model")) c.model = facloc::parse_model(doc["model"].get<std::string>());
    if (doc.contains("family") && !doc["family"].is_null()) {
      c.family = facloc::parse_family(doc["family"].get<std::string>());
      if (doc.contains("family_params")) c.family_params = family_params(doc["family_params"].dump().c_str());
    }
    if (doc.contains("prediction")) {
      c.prediction = facloc::parse_prediction_mode(doc["prediction"].get<std::string>());
    }
    if (doc.contains("seed")) c.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("count")) c.count = doc["count"].get<std::int64_t>();
    if (doc.contains("workers")) c.workers = doc["workers"].get<int>();
    if (doc.contains("check_sp")) c.check_sp = doc["check_sp"].get<bool>();
    c.keep_rows = csv_out != nullptr || (doc.contains("rows") && doc["rows"].get<bool>());
    facloc::SweepReport r = facloc::sweep(c);

    json res;
    res["mechanism"] = json::parse(facloc::mechanism_to_json(c.mechanism));
    res["objective"] = std::string(facloc::objective_name(c.objective));
    res["count"] = r.count;
    res["max_ratio"] = show(r.max_ratio, digits);
    res["argmax_index"] = r.argmax_index;
    res["argmax_instance"] =
        r.argmax_instance ? json::parse(facloc::instance_to_json(*r.argmax_instance)) : json(nullptr);
    res["min_bound"] = r.min_bound ? json(show(*r.min_bound, digits)) : json(nullptr);
    res["out_of_bound"] = r.out_of_bound;
    res["sp_violations"] = r.sp_violations;
    res["all_within"] = r.all_within;
    *json_out = dup_string(res.dump());
    if (csv_out != nullptr) {
      std::string csv = facloc::sweep_csv_header() + "\n";
      for (const auto& row : r.rows) csv += facloc::sweep_csv_row(row, digits) + "\n";
      *csv_out = dup_string(csv);
    }
    if (all_ok != nullptr) *all_ok = (r.all_within && r.sp_violations == 0) ? 1 : 0;
  });
}

facloc_status facloc_bounds(int n_min, int n_max, int digits, char** out) {
  FACLOC_NEED(out);
  return guarded([&] {
    facloc::require(n_min >= 3 && n_min <= n_max && n_max <= 10000, facloc::ErrorKind::kInvalidInput,
                    "bounds needs 3 <= n_min <= n_max <= 10000");
    json doc = json::object();
    for (int n = n_min; n <= n_max; ++n) {
      for (int z = 1; z <= (n - 1) / 2; ++z) {
        json row;
        row["n"] = n;
        row["z"] = z;
        row["f_util"] = show(facloc::f_util(n, z), digits);
        row["f_rand"] = n % 2 == 0 ? json(show(facloc::f_rand(n, z), digits)) : json(nullptr);
        row["egalitarian"] = "2";
        row["gamma_max"] = facloc::gamma_max(n, z);
        row["in_range_l"] = facloc::in_range_left(n, z);
        row["in_range_r"] = facloc::in_range_right(n, z);
        if (n >= 3 * z) {
          row["f_robust"] = show(facloc::f_robust(n, z), digits);
        } else {
          int dc = facloc::delta_c(n, z);
          int dr = facloc::delta_r(n, z);
          row["delta_c"] = dc;
          row["delta_r"] = dr;
          row["consistency"] = show(facloc::f_delta(n, z, dc), digits);
          row["robustness"] = show(facloc::f_delta(n, z, dr), digits);
        }
        doc[std::to_string(n) + "," + std::to_string(z)] = row;
      }
    }
    *out = dup_string(doc.dump());
  });
}

facloc_status facloc_reproduce(const char* target, int64_t sweep_count, uint64_t seed, int workers,
                               int digits, char** out, int* ok) {
  FACLOC_NEED(target);
  FACLOC_NEED(out);
  return guarded([&] {
    facloc::ReproduceOutput r = facloc::reproduce(target, sweep_count, seed, workers, digits);
    *out = dup_string(r.text);
    if (ok != nullptr) *ok = r.ok ? 1 : 0;
  });
}

facloc_status facloc_generate_random(int n, int z, const char* model, uint64_t seed,
                                     facloc_instance** out) {
  FACLOC_NEED(out);
  return guarded([&] {
    facloc::RandomModel m = model == nullptr ? facloc::RandomModel::kUniform : facloc::parse_model(model);
    *out = new facloc_instance{facloc::gen_random(n, z, m, seed), std::nullopt};
  });
}

facloc_status facloc_generate_family(const char* family, const char* params_json,
                                     facloc_instance** out) {
  FACLOC_NEED(family);
  FACLOC_NEED(out);
  return guarded([&] {
    *out = new facloc_instance{facloc::gen_family(facloc::parse_family(family), family_params(params_json)),
                               std::nullopt};
  });
}

facloc_status facloc_replay(const facloc_mechanism* mechanism, const char* family,
                            const char* params_json, int digits, char** out, int* unchanged) {
  FACLOC_NEED(mechanism);
  FACLOC_NEED(family);
  FACLOC_NEED(out);
  return guarded([&] {
    auto steps = facloc::family_sequence(facloc::parse_family(family), family_params(params_json));
    facloc::ReplayResult r = facloc::replay_sequence(mechanism->value, steps);
    json doc;
    doc["mechanism"] = json::parse(facloc::mechanism_to_json(mechanism->value));
    doc["steps"] = steps.size();
    doc["applicable"] = r.applicable;
    doc["unchanged"] = r.unchanged;
    doc["first_change"] = r.first_change;
    doc["outcomes"] = json::array();
    for (const auto& o : r.outcomes) doc["outcomes"].push_back(show(o, digits));
    if (unchanged != nullptr) *unchanged = r.unchanged ? 1 : 0;
    *out = dup_string(doc.dump());
  });
}

}  // extern "C"
