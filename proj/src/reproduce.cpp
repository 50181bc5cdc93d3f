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

#include "facloc/reproduce.hpp"

#include "facloc/error.hpp"
#include "facloc/families.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/objectives.hpp"
#include "facloc/predictions.hpp"
#include "facloc/sweep.hpp"
#include "facloc/verification.hpp"
#include "json.hpp"

namespace facloc {

namespace {

std::string show(const ExtendedRational& q, int digits) {
  return digits < 0 ? q.to_string() : q.to_decimal(digits);
}

}  // namespace

std::vector<FrontierRow> reproduce_figure1(std::int64_t sweep_count, std::uint64_t seed, int workers) {
  std::vector<FrontierRow> rows;
  for (int n : {8, 12, 16, 20}) {
    for (int z = 1; z <= (n - 1) / 2; ++z) {
      FrontierRow row;
      row.n = n;
      row.z = z;
      row.f = Rational(n, n - 2 * z);
      FamilyParams p;
      p.n = n;
      p.z = z;
      p.variant = 2;
      row.attained = measure_ratio(mech::LeftMedian{}, gen_family(Family::kFig6, p),
                                   ObjectiveKind::kUtilitarian)
                         .ratio;
      row.sweep_max = ExtendedRational(1);
      if (sweep_count > 0) {
        SweepConfig c;
        c.mechanism = mech::LeftMedian{};
        c.n = n;
        c.z = z;
        c.count = sweep_count;
        c.seed = derive_seed(seed, static_cast<std::uint64_t>(n * 100 + z));
        c.workers = workers;
        row.sweep_max = sweep(c).max_ratio;
      }
      row.match = row.attained == ExtendedRational(row.f) && row.sweep_max <= ExtendedRational(row.f);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<BoundsRow> reproduce_table1(const std::vector<int>& ns) {
  std::vector<BoundsRow> rows;
  for (int n : ns) {
    for (int z = 1; z <= (n - 1) / 2; ++z) {
      if (!mechanism_feasible(n, z)) continue;
      BoundsRow u;
      u.objective = "utilitarian";
      u.n = n;
      u.z = z;
      u.det_upper = f_util(n, z).to_string();
      u.det_lower = u.det_upper;
      u.rand_upper = n % 2 == 0 ? f_rand(n, z).to_string() : "-";
      u.rand_lower = (n == 4 && z == 1) ? "3/2" : (n == 5 && z == 2) ? "2" : "-";
      rows.push_back(u);
      BoundsRow e;
      e.objective = "egalitarian";
      e.n = n;
      e.z = z;
      e.det_upper = e.det_lower = e.rand_upper = e.rand_lower = "2";
      rows.push_back(e);
    }
  }
  return rows;
}

WorkedExample reproduce_worked_example() {
  Instance inst = gen_family(Family::kFig10, FamilyParams{});
  const Rational& yhat = *inst.prediction();
  WorkedExample w;
  w.opt_cost = opt_utilitarian(inst).cost;
  w.prediction_cost = eval_cost(inst, yhat, ObjectiveKind::kUtilitarian).cost;
  w.mechanism_location = in_range(inst, yhat, 0);
  w.mechanism_cost = eval_cost(inst, w.mechanism_location, ObjectiveKind::kUtilitarian).cost;
  w.eta = prediction_error(inst, yhat).value;
  return w;
}

ReproduceOutput reproduce(std::string_view target, std::int64_t sweep_count, std::uint64_t seed,
                          int workers, int digits) {
  ReproduceOutput out;
  if (target == "figure1") {
    out.text = "n,z,f,attained,sweep_max,match\n";
    for (const FrontierRow& r : reproduce_figure1(sweep_count, seed, workers)) {
      out.text += std::to_string(r.n) + "," + std::to_string(r.z) + "," + show(r.f, digits) + "," +
                  show(r.attained, digits) + "," + show(r.sweep_max, digits) + "," +
                  (r.match ? "true" : "false") + "\n";
      out.ok = out.ok && r.match;
    }
  } else if (target == "table1") {
    out.text = "objective,n,z,det_upper,det_lower,rand_upper,rand_lower\n";
    for (const BoundsRow& r : reproduce_table1({4, 5, 6, 7, 8, 9, 10, 12, 16, 20})) {
      out.text += r.objective + "," + std::to_string(r.n) + "," + std::to_string(r.z) + "," +
                  r.det_upper + "," + r.det_lower + "," + r.rand_upper + "," + r.rand_lower + "\n";
    }
  } else if (target == "example-5-2-2") {
    WorkedExample w = reproduce_worked_example();
    nlohmann::json doc;
    doc["opt_cost"] = show(w.opt_cost, digits);
    doc["prediction_cost"] = show(w.prediction_cost, digits);
    doc["mechanism_cost"] = show(w.mechanism_cost, digits);
    doc["mechanism_location"] = show(w.mechanism_location, digits);
    doc["eta"] = show(w.eta, digits);
    doc["triple"] = {show(w.opt_cost, digits), show(w.prediction_cost, digits),
                     show(w.mechanism_cost, digits)};
    out.text = doc.dump(2) + "\n";
    out.ok = w.opt_cost == Rational(1) && w.prediction_cost == Rational(14, 5) &&
             w.mechanism_cost == Rational(37, 10);
  } else {
    fail(ErrorKind::kInvalidInput, "unknown reproduce target '" + std::string(target) + "'");
  }
  return out;
}

}  // namespace facloc
