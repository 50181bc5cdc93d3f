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

#include "facloc/sweep.hpp"

#include <exception>
#include <mutex>
#include <thread>

#include "facloc/error.hpp"
#include "facloc/verification.hpp"

namespace facloc {

namespace {

struct Slot {
  ExtendedRational ratio;
  std::optional<ExtendedRational> bound;
  bool within = true;
  bool sp_violation = false;
  std::optional<SweepRow> row;
};

std::string render(const ExtendedRational& q, int digits) {
  return digits < 0 ? q.to_string() : q.to_decimal(digits);
}

}  // namespace

Instance sweep_instance(const SweepConfig& config, std::int64_t index) {
  std::uint64_t s = derive_seed(config.seed, static_cast<std::uint64_t>(index));
  Instance inst = config.family ? gen_family(*config.family, config.family_params)
                                : gen_random(config.n, config.z, config.model, s);
  if (config.prediction != PredictionMode::kNone) {
    inst = inst.with_prediction(draw_prediction(inst, config.prediction, s));
  }
  return inst;
}

SweepReport sweep(const SweepConfig& config) {
  require(config.count >= 0, ErrorKind::kInvalidInput, "count must be non-negative");
  require(config.workers >= 1, ErrorKind::kInvalidInput, "workers must be positive");
  std::vector<Slot> slots(static_cast<std::size_t>(config.count));
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&](int worker) {
    try {
      for (std::int64_t i = worker; i < config.count; i += config.workers) {
        Instance inst = sweep_instance(config, i);
        RatioReport r = measure_ratio(config.mechanism, inst, config.objective);
        Slot& slot = slots[static_cast<std::size_t>(i)];
        slot.ratio = r.ratio;
        slot.bound = r.bound;
        slot.within = r.within_bound;
        if (config.check_sp) {
          slot.sp_violation = check_sp_in_expectation(config.mechanism, inst).has_value();
        }
        if (config.keep_rows) {
          SweepRow row;
          row.index = i;
          row.seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
          row.n = inst.n();
          row.z = inst.z();
          row.family = config.family ? std::string(family_name(*config.family))
                                     : std::string(model_name(config.model));
          row.mechanism = mechanism_label(config.mechanism);
          row.objective = std::string(objective_name(config.objective));
          row.mech_cost = r.mechanism_cost;
          row.opt_cost = r.opt_cost;
          row.ratio = r.ratio;
          row.bound = r.bound;
          row.within_bound = r.within_bound;
          slot.row = std::move(row);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (config.workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < config.workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepReport report;
  report.count = config.count;
  for (std::int64_t i = 0; i < config.count; ++i) {
    Slot& s = slots[static_cast<std::size_t>(i)];
    if (report.argmax_index < 0 || s.ratio > report.max_ratio) {
      report.max_ratio = s.ratio;
      report.argmax_index = i;
    }
    if (s.bound && (!report.min_bound || *s.bound < *report.min_bound)) report.min_bound = s.bound;
    if (!s.within) {
      ++report.out_of_bound;
      report.all_within = false;
    }
    if (s.sp_violation) ++report.sp_violations;
    if (s.row) report.rows.push_back(std::move(*s.row));
  }
  if (report.argmax_index >= 0) report.argmax_instance = sweep_instance(config, report.argmax_index);
  return report;
}

std::string sweep_csv_header() {
  return "seed,n,z,family,mechanism,objective,mech_cost,opt_cost,ratio,bound,within_bound";
}

std::string sweep_csv_row(const SweepRow& row, int digits) {
  std::string out = std::to_string(row.seed) + "," + std::to_string(row.n) + "," +
                    std::to_string(row.z) + "," + row.family + "," + row.mechanism + "," +
                    row.objective + "," + render(row.mech_cost, digits) + "," +
                    render(ExtendedRational(row.opt_cost), digits) + "," + render(row.ratio, digits) +
                    "," + (row.bound ? render(*row.bound, digits) : std::string()) + "," +
                    (row.within_bound ? "true" : "false");
  return out;
}

}  // namespace facloc
