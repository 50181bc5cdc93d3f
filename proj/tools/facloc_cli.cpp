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

// Command-line front end. Links only the C interface.
//
//   facloc solve      --instance FILE [--objective utilitarian|egalitarian] [--brute-force]
//   facloc run        --instance FILE --mech NAME [--k K] [--gamma G] [--prediction Q]
//   facloc verify-sp  --instance FILE --mech NAME
//   facloc sweep      --mech NAME --n N --z Z [--model uniform|clustered] [--family F]
//   facloc bounds     [--n N | --n-min A --n-max B]
//   facloc reproduce  figure1|table1|example-5-2-2
//   facloc generate   (--family F | --model M --n N --z Z --seed S)
//   facloc replay     --mech NAME --family F
//
// Exit status: 0 success, 1 bound or strategyproofness failure, 2 invalid input.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "facloc/facloc.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct CliError {
  int code;
  std::string message;
};

void check(facloc_status status) {
  if (status == FACLOC_OK) return;
  int code = status == FACLOC_ERR_INTERNAL ? kExitFailed : kExitInvalid;
  throw CliError{code, facloc_last_error()};
}

// Owns a string returned by the library.
class Text {
 public:
  Text() = default;
  ~Text() { facloc_string_free(ptr_); }
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  char** out() { return &ptr_; }
  std::string str() const { return ptr_ ? std::string(ptr_) : std::string(); }

 private:
  char* ptr_ = nullptr;
};

struct InstanceHandle {
  facloc_instance* ptr = nullptr;
  ~InstanceHandle() { facloc_instance_free(ptr); }
};

struct MechanismHandle {
  facloc_mechanism* ptr = nullptr;
  ~MechanismHandle() { facloc_mechanism_free(ptr); }
};

struct Options {
  std::string instance_path;
  std::string mech = "left_median";
  std::optional<int> k;
  std::optional<int> gamma;
  std::string objective;
  std::optional<int> z_override;
  std::string prediction;
  std::uint64_t seed = 1;
  std::int64_t count = 1000;
  int workers = 1;
  std::string out;
  std::string format = "json";
  int decimal = -1;
  bool brute_force = false;
  bool check_sp = false;
  int n = 0;
  int z = 0;
  int n_min = 3;
  int n_max = 20;
  std::string model = "uniform";
  std::string family;
  std::string params;
  std::string target;
};

std::string read_source(const std::string& path) {
  if (path.empty()) throw CliError{kExitInvalid, "--instance is required"};
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw CliError{kExitInvalid, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw CliError{kExitInvalid, "cannot write " + o.out};
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

std::string pretty(const std::string& compact) { return json::parse(compact).dump(2); }

void load_instance(const Options& o, InstanceHandle& h) {
  check(facloc_instance_parse(read_source(o.instance_path).c_str(), &h.ptr));
  if (o.z_override) check(facloc_instance_set_outliers(h.ptr, *o.z_override));
  if (!o.prediction.empty()) check(facloc_instance_set_prediction(h.ptr, o.prediction.c_str()));
}

facloc_objective objective_for(const Options& o, const facloc_instance* instance) {
  facloc_objective obj = FACLOC_UTILITARIAN;
  if (!o.objective.empty()) {
    check(facloc_parse_objective(o.objective.c_str(), &obj));
  } else if (instance != nullptr) {
    int has = 0;
    facloc_objective from_doc;
    check(facloc_instance_objective(instance, &has, &from_doc));
    if (has) obj = from_doc;
  }
  return obj;
}

std::string mechanism_text(const Options& o) {
  if (!o.mech.empty() && o.mech.front() == '{') return o.mech;
  json doc;
  doc["mech"] = o.mech;
  if (o.k) doc["k"] = *o.k;
  if (o.gamma) doc["gamma"] = *o.gamma;
  if (o.mech == "oracle" && !o.objective.empty()) doc["objective"] = o.objective;
  return doc.dump();
}

void load_mechanism(const Options& o, MechanismHandle& h) {
  check(facloc_mechanism_parse(mechanism_text(o).c_str(), &h.ptr));
}

int cmd_solve(const Options& o) {
  InstanceHandle inst;
  load_instance(o, inst);
  Text out;
  check(facloc_solve(inst.ptr, objective_for(o, inst.ptr), o.brute_force ? 1 : 0, o.decimal, out.out()));
  emit(o, pretty(out.str()));
  return kExitOk;
}

int cmd_run(const Options& o) {
  InstanceHandle inst;
  load_instance(o, inst);
  MechanismHandle m;
  load_mechanism(o, m);
  Text out;
  int within = 1;
  check(facloc_run(m.ptr, inst.ptr, objective_for(o, inst.ptr), o.decimal, out.out(), &within));
  emit(o, pretty(out.str()));
  return within ? kExitOk : kExitFailed;
}

int cmd_verify(const Options& o) {
  InstanceHandle inst;
  load_instance(o, inst);
  MechanismHandle m;
  load_mechanism(o, m);
  Text out;
  int violation = 0;
  check(facloc_verify_sp(m.ptr, inst.ptr, o.decimal, out.out(), &violation));
  emit(o, pretty(out.str()));
  return violation ? kExitFailed : kExitOk;
}

int cmd_sweep(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw CliError{kExitInvalid, "--format must be json or csv"};
  json config;
  config["mech"] = json::parse(mechanism_text(o));
  config["objective"] = o.objective.empty() ? "utilitarian" : o.objective;
  config["n"] = o.n;
  config["z"] = o.z;
  config["model"] = o.model;
  if (!o.family.empty()) {
    config["family"] = o.family;
    if (!o.params.empty()) config["family_params"] = json::parse(o.params);
  }
  config["prediction"] = o.prediction.empty() ? "none" : o.prediction;
  config["seed"] = o.seed;
  config["count"] = o.count;
  config["workers"] = o.workers;
  config["check_sp"] = o.check_sp;
  Text summary;
  Text csv;
  int ok = 1;
  check(facloc_sweep(config.dump().c_str(), o.decimal, summary.out(), o.format == "csv" ? csv.out() : nullptr,
                     &ok));
  if (o.format == "csv") {
    emit(o, csv.str());
    std::cerr << summary.str() << "\n";
  } else {
    emit(o, pretty(summary.str()));
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_bounds(const Options& o) {
  int lo = o.n > 0 ? o.n : o.n_min;
  int hi = o.n > 0 ? o.n : o.n_max;
  Text out;
  check(facloc_bounds(lo, hi, o.decimal, out.out()));
  emit(o, pretty(out.str()));
  return kExitOk;
}

int cmd_reproduce(const Options& o) {
  Text out;
  int ok = 1;
  check(facloc_reproduce(o.target.c_str(), o.count, o.seed, o.workers, o.decimal, out.out(), &ok));
  emit(o, out.str());
  return ok ? kExitOk : kExitFailed;
}

int cmd_generate(const Options& o) {
  InstanceHandle inst;
  if (!o.family.empty()) {
    check(facloc_generate_family(o.family.c_str(), o.params.empty() ? nullptr : o.params.c_str(), &inst.ptr));
  } else {
    check(facloc_generate_random(o.n, o.z, o.model.c_str(), o.seed, &inst.ptr));
  }
  Text out;
  check(facloc_instance_to_json(inst.ptr, out.out()));
  emit(o, out.str());
  return kExitOk;
}

int cmd_replay(const Options& o) {
  if (o.family.empty()) throw CliError{kExitInvalid, "--family is required"};
  MechanismHandle m;
  load_mechanism(o, m);
  Text out;
  int unchanged = 0;
  check(facloc_replay(m.ptr, o.family.c_str(), o.params.empty() ? nullptr : o.params.c_str(), o.decimal,
                      out.out(), &unchanged));
  emit(o, pretty(out.str()));
  return unchanged ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-facility location on the line with outliers"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file");
    sub->add_option("--decimal", o.decimal, "Render numbers with this many decimals instead of p/q");
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance_path, "Instance JSON file, or - for stdin");
    sub->add_option("--z-override", o.z_override, "Replace the outlier budget");
    sub->add_option("--objective", o.objective, "utilitarian or egalitarian");
  };
  auto add_mech = [&](CLI::App* sub) {
    sub->add_option("--mech", o.mech, "Mechanism name or JSON tag");
    sub->add_option("--k", o.k, "Order statistic for kth");
    sub->add_option("--gamma", o.gamma, "Confidence parameter for in_range");
  };

  CLI::App* solve = app.add_subcommand("solve", "Exact optimum");
  add_instance(solve);
  add_common(solve);
  solve->add_flag("--brute-force", o.brute_force, "Enumerate all subsets instead");

  CLI::App* run = app.add_subcommand("run", "Run a mechanism and measure its ratio");
  add_instance(run);
  add_mech(run);
  add_common(run);
  run->add_option("--prediction", o.prediction, "Predicted optimal location");

  CLI::App* verify = app.add_subcommand("verify-sp", "Search for a profitable misreport");
  add_instance(verify);
  add_mech(verify);
  add_common(verify);
  verify->add_option("--prediction", o.prediction, "Predicted optimal location");

  CLI::App* sw = app.add_subcommand("sweep", "Ratio sweep over generated instances");
  add_mech(sw);
  add_common(sw);
  sw->add_option("--objective", o.objective, "utilitarian or egalitarian");
  sw->add_option("--n", o.n, "Agents");
  sw->add_option("--z", o.z, "Outliers");
  sw->add_option("--model", o.model, "uniform or clustered");
  sw->add_option("--family", o.family, "Use a fixed adversarial family instead");
  sw->add_option("--params", o.params, "Family parameters as JSON");
  sw->add_option("--prediction", o.prediction, "none, perfect, uniform or adversarial");
  sw->add_option("--seed", o.seed, "Base seed");
  sw->add_option("--count", o.count, "Number of instances");
  sw->add_option("--workers", o.workers, "Worker threads");
  sw->add_option("--format", o.format, "json or csv");
  sw->add_flag("--check-sp", o.check_sp, "Also audit strategyproofness");

  CLI::App* bounds = app.add_subcommand("bounds", "Guarantee table keyed by (n, z)");
  add_common(bounds);
  bounds->add_option("--n", o.n, "Single n");
  bounds->add_option("--n-min", o.n_min, "Smallest n");
  bounds->add_option("--n-max", o.n_max, "Largest n");

  CLI::App* repro = app.add_subcommand("reproduce", "Recompute the frontier, bound table or worked example");
  add_common(repro);
  repro->add_option("target", o.target, "figure1, table1 or example-5-2-2")->required();
  repro->add_option("--count", o.count, "Random instances per (n, z) for figure1");
  repro->add_option("--seed", o.seed, "Base seed");
  repro->add_option("--workers", o.workers, "Worker threads");

  CLI::App* gen = app.add_subcommand("generate", "Print a generated instance");
  add_common(gen);
  gen->add_option("--family", o.family, "Adversarial family");
  gen->add_option("--params", o.params, "Family parameters as JSON");
  gen->add_option("--model", o.model, "uniform or clustered");
  gen->add_option("--n", o.n, "Agents");
  gen->add_option("--z", o.z, "Outliers");
  gen->add_option("--seed", o.seed, "Seed");

  CLI::App* replay = app.add_subcommand("replay", "Replay a deviation sequence");
  add_mech(replay);
  add_common(replay);
  replay->add_option("--family", o.family, "fig3, fig4, fig7, fig8 or fig9 family");
  replay->add_option("--params", o.params, "Family parameters as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*run) return cmd_run(o);
    if (*verify) return cmd_verify(o);
    if (*sw) return cmd_sweep(o);
    if (*bounds) return cmd_bounds(o);
    if (*repro) return cmd_reproduce(o);
    if (*gen) return cmd_generate(o);
    if (*replay) return cmd_replay(o);
  } catch (const CliError& e) {
    std::cerr << "facloc: " << e.message << "\n";
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "facloc: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
