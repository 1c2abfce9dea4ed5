// Copyright 2026 The FairNoise Authors
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

#include "fairnoise/sweep.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "fairnoise/csv_io.h"
#include "fairnoise/denoise.h"
#include "fairnoise/error.h"
#include "fairnoise/estimation.h"
#include "fairnoise/noise.h"
#include "fairnoise/rng.h"

namespace fairnoise {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view TrimView(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Error BadValue(std::string_view key, std::string_view value) {
  return Error(ErrorCode::kInvalidArgument,
               "invalid value '" + std::string(value) + "' for '" +
                   std::string(key) + "'");
}

double ParseDouble(std::string_view key, std::string_view text) {
  text = TrimView(text);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw BadValue(key, text);
  }
  return value;
}

template <typename Int>
Int ParseInt(std::string_view key, std::string_view text) {
  text = TrimView(text);
  Int value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw BadValue(key, text);
  }
  return value;
}

bool ParseBool(std::string_view key, std::string_view text) {
  text = TrimView(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw BadValue(key, text);
}

std::vector<std::string_view> SplitList(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    const auto part = TrimView(text.substr(start, pos - start));
    if (!part.empty()) parts.push_back(part);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<double> ParseDoubleList(std::string_view key,
                                    std::string_view text) {
  std::vector<double> values;
  for (const auto part : SplitList(text, ',')) {
    values.push_back(ParseDouble(key, part));
  }
  return values;
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

bool SameValue(double a, double b) {
  return a == b || (std::isnan(a) && std::isnan(b));
}

// NaN sorts after every number.
std::pair<bool, double> OrderKey(double v) {
  return {std::isnan(v), std::isnan(v) ? 0.0 : v};
}

auto RowKey(const ResultRow& r) {
  return std::make_tuple(static_cast<int>(r.method), OrderKey(r.tau),
                         OrderKey(r.rho_plus_hat), OrderKey(r.rho_minus_hat),
                         r.repetition, static_cast<int>(r.split));
}

struct RatePair {
  double plus = 0.0;
  double minus = 0.0;
};

struct Repetition {
  Dataset train;
  Dataset test;
  Dataset train_corrupted;
  std::uint64_t seed = 0;
  std::vector<RatePair> rates;
  // Set when rate estimation failed; rate-dependent cells then fail.
  std::string rate_error;
};

struct Task {
  int repetition = 0;
  Method method = Method::kNocor;
  double tau = 0.0;
  // Index into the repetition's rate pairs, or -1 for methods that ignore
  // the rates (one fit, replicated across every pair).
  int rate_index = -1;
};

bool UsesRates(Method m) {
  return m == Method::kCorScale || m == Method::kDenoise;
}

Repetition PrepareRepetition(const Dataset& data, const ExperimentConfig& config,
                             int rep) {
  Repetition out;
  out.seed = config.seed + static_cast<std::uint64_t>(rep);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(data.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  Rng rng(DeriveSeed(out.seed, 1));
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.Below(i)]);
  }
  const auto n_train = static_cast<std::size_t>(
      std::floor(config.train_fraction * static_cast<double>(order.size())));
  if (n_train == 0 || n_train == order.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "train fraction leaves an empty split");
  }
  const std::span<const Eigen::Index> all(order);
  out.train = data.Subset(all.first(n_train));
  out.test = data.Subset(all.subspan(n_train));
  out.train_corrupted =
      inject_ccn(out.train, CCNNoise(config.rho_plus, config.rho_minus),
                 DeriveSeed(out.seed, 2));

  if (config.rate_source == RateSource::kEstimate) {
    try {
      const CCNEstimate est = estimate_ccn_rates(out.train_corrupted);
      out.rates.push_back({est.rates.rho_plus(), est.rates.rho_minus()});
    } catch (const std::exception& e) {
      out.rates.push_back({kNaN, kNaN});
      out.rate_error = e.what();
    }
    return out;
  }
  const std::vector<double> plus = config.rho_plus_hat.empty()
                                       ? std::vector<double>{config.rho_plus}
                                       : config.rho_plus_hat;
  const std::vector<double> minus =
      config.rho_minus_hat.empty() ? std::vector<double>{config.rho_minus}
                                   : config.rho_minus_hat;
  for (const double p : plus) {
    for (const double m : minus) out.rates.push_back({p, m});
  }
  return out;
}

std::vector<ResultRow> RunTask(const Task& task, const Repetition& rep,
                               const ExperimentConfig& config) {
  const FairnessSpec spec{config.criterion, config.fairness_loss, task.tau};
  TrainConfig train = config.train;
  train.seed = rep.seed;

  std::vector<RatePair> pairs;
  if (task.rate_index >= 0) {
    pairs.push_back(rep.rates[static_cast<std::size_t>(task.rate_index)]);
  } else {
    pairs = rep.rates;
  }

  double tau_prime = task.tau;
  double violation[2] = {kNaN, kNaN};
  double error[2] = {kNaN, kNaN};
  try {
    FairClassifier model = [&]() -> FairClassifier {
      switch (task.method) {
        case Method::kNocor:
          return train_fair(rep.train, spec, train);
        case Method::kCor:
          return train_fair(rep.train_corrupted, spec, train);
        case Method::kCorScale:
        case Method::kDenoise:
          break;
      }
      if (!rep.rate_error.empty()) {
        throw Error(ErrorCode::kInvalidArgument, rep.rate_error);
      }
      const CCNNoise rates(pairs.front().plus, pairs.front().minus);
      if (task.method == Method::kDenoise) {
        return train_fair(denoise_ccn(rep.train_corrupted, rates).data, spec,
                          train);
      }
      if (config.criterion == Criterion::kDemographicParity) {
        const MCConversion mc = ccn_to_mc_from_corrupted(
            rates, rep.train_corrupted.BaseRate());
        return train_fair_noisy(rep.train_corrupted, spec, mc.noise, train);
      }
      const double slice_rate =
          rep.train_corrupted.Filter(Slice::Label(1)).BaseRate();
      const MCConversion mc = ccn_to_mc_from_corrupted(rates, slice_rate);
      return train_fair_noisy(
          rep.train_corrupted, spec,
          EOConditionalNoise(mc.noise.alpha(), mc.noise.beta()), train);
    }();
    tau_prime = model.trace().tolerance;
    const Dataset* splits[2] = {&rep.train, &rep.test};
    for (int s = 0; s < 2; ++s) {
      const BitVector predictions = model.Predict(*splits[s]);
      violation[s] = disparity(*splits[s], predictions, spec);
      error[s] = accuracy_risk(*splits[s], predictions);
    }
  } catch (const std::exception&) {
    // Recorded as a failed cell.
    if (task.method == Method::kCorScale) tau_prime = kNaN;
  }

  std::vector<ResultRow> rows;
  for (const auto& pair : pairs) {
    for (int s = 0; s < 2; ++s) {
      ResultRow row;
      row.method = task.method;
      row.tau = task.tau;
      row.tau_prime = tau_prime;
      row.rho_plus_hat = pair.plus;
      row.rho_minus_hat = pair.minus;
      row.split = s == 0 ? Split::kTrain : Split::kTest;
      row.fairness_violation = violation[s];
      row.error = error[s];
      row.seed = rep.seed;
      row.repetition = task.repetition;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kNocor:
      return "nocor";
    case Method::kCor:
      return "cor";
    case Method::kCorScale:
      return "cor_scale";
    case Method::kDenoise:
      return "denoise";
  }
  return "unknown";
}

Method ParseMethod(std::string_view name) {
  for (const Method m : {Method::kNocor, Method::kCor, Method::kCorScale,
                         Method::kDenoise}) {
    if (MethodName(m) == name) return m;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown method '" + std::string(name) + "'");
}

std::string_view SplitName(Split split) {
  return split == Split::kTrain ? "train" : "test";
}

void ExperimentConfig::Validate() const {
  if (tau_grid.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "tau grid is empty");
  }
  for (const double tau : tau_grid) {
    if (!(tau >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "tau values must be >= 0");
    }
  }
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "train fraction must be in (0,1)");
  }
  if (repetitions < 1) {
    throw Error(ErrorCode::kInvalidArgument, "repetitions must be >= 1");
  }
  if (methods.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no methods selected");
  }
  if (jobs < 1) throw Error(ErrorCode::kInvalidArgument, "jobs must be >= 1");
  CCNNoise(rho_plus, rho_minus);
  for (const double p : rho_plus_hat) {
    for (const double m : rho_minus_hat.empty()
                              ? std::vector<double>{rho_minus}
                              : rho_minus_hat) {
      CCNNoise(p, m);
    }
  }
  for (const double m : rho_minus_hat) CCNNoise(0.0, m);
  if (input.empty()) synthetic.Validate();
  train.Validate();
}

void ApplySetting(ExperimentConfig& config, std::string_view key,
                  std::string_view value) {
  key = TrimView(key);
  value = TrimView(value);
  auto& syn = config.synthetic;
  auto& tr = config.train;
  if (key == "input") {
    config.input = std::string(value);
  } else if (key == "drop_missing") {
    config.drop_missing = ParseBool(key, value);
  } else if (key == "synthetic.n") {
    syn.n = ParseInt<long>(key, value);
  } else if (key == "synthetic.seed") {
    syn.seed = ParseInt<std::uint64_t>(key, value);
  } else if (key == "synthetic.variance") {
    syn.variance = ParseDouble(key, value);
  } else if (key == "synthetic.proportions") {
    const auto p = ParseDoubleList(key, value);
    if (p.size() != 4) throw BadValue(key, value);
    std::copy(p.begin(), p.end(), syn.proportions.begin());
  } else if (key == "synthetic.means") {
    // Four ';'-separated cells in (A,Y) order 00;01;10;11, each a ','-list.
    const auto cells = SplitList(value, ';');
    if (cells.size() != 4) throw BadValue(key, value);
    for (std::size_t c = 0; c < 4; ++c) {
      const auto v = ParseDoubleList(key, cells[c]);
      syn.means[c] = Eigen::Map<const Eigen::VectorXd>(
          v.data(), static_cast<Eigen::Index>(v.size()));
    }
  } else if (key == "criterion") {
    config.criterion = ParseCriterion(value);
    config.fairness_loss = FairnessSpec::Default(config.criterion, 0).loss;
  } else if (key == "fairness_loss") {
    config.fairness_loss = ParseFairnessLoss(value);
  } else if (key == "rho_plus") {
    config.rho_plus = ParseDouble(key, value);
  } else if (key == "rho_minus") {
    config.rho_minus = ParseDouble(key, value);
  } else if (key == "rate_source") {
    if (value == "known") {
      config.rate_source = RateSource::kKnown;
    } else if (value == "estimate") {
      config.rate_source = RateSource::kEstimate;
    } else {
      throw BadValue(key, value);
    }
  } else if (key == "rho_plus_hat") {
    config.rho_plus_hat = ParseDoubleList(key, value);
  } else if (key == "rho_minus_hat") {
    config.rho_minus_hat = ParseDoubleList(key, value);
  } else if (key == "tau_grid") {
    config.tau_grid = ParseDoubleList(key, value);
  } else if (key == "methods") {
    config.methods.clear();
    for (const auto part : SplitList(value, ',')) {
      config.methods.push_back(ParseMethod(part));
    }
  } else if (key == "repetitions") {
    config.repetitions = ParseInt<int>(key, value);
  } else if (key == "train_fraction") {
    config.train_fraction = ParseDouble(key, value);
  } else if (key == "seed") {
    config.seed = ParseInt<std::uint64_t>(key, value);
  } else if (key == "jobs") {
    config.jobs = ParseInt<int>(key, value);
  } else if (key == "train.dual_step") {
    tr.dual_step = ParseDouble(key, value);
  } else if (key == "train.dual_bound") {
    tr.dual_bound = ParseDouble(key, value);
  } else if (key == "train.outer_iterations") {
    tr.outer_iterations = ParseInt<int>(key, value);
  } else if (key == "train.base_iterations") {
    tr.base_iterations = ParseInt<int>(key, value);
  } else if (key == "train.base_step") {
    tr.base_step = ParseDouble(key, value);
  } else if (key == "train.regularization") {
    tr.regularization = ParseDouble(key, value);
  } else if (key == "train.feasibility_slack") {
    tr.feasibility_slack = ParseDouble(key, value);
  } else if (key == "train.return_mode") {
    if (value == "average") {
      tr.return_mode = ReturnMode::kAverage;
    } else if (value == "best") {
      tr.return_mode = ReturnMode::kBestIterate;
    } else {
      throw BadValue(key, value);
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown setting '" + std::string(key) + "'");
  }
}

ExperimentConfig ParseExperimentConfig(std::istream& in,
                                       ExperimentConfig base) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = TrimView(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError,
                  "config line " + std::to_string(line_no) +
                      ": expected key = value");
    }
    ApplySetting(base, view.substr(0, eq), view.substr(eq + 1));
  }
  return base;
}

ExperimentConfig LoadExperimentConfig(const std::string& path,
                                      ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return ParseExperimentConfig(in, std::move(base));
}

bool ResultRow::failed() const {
  return std::isnan(fairness_violation) || std::isnan(error);
}

bool ResultRow::operator==(const ResultRow& o) const {
  return method == o.method && SameValue(tau, o.tau) &&
         SameValue(tau_prime, o.tau_prime) &&
         SameValue(rho_plus_hat, o.rho_plus_hat) &&
         SameValue(rho_minus_hat, o.rho_minus_hat) && split == o.split &&
         SameValue(fairness_violation, o.fairness_violation) &&
         SameValue(error, o.error) && seed == o.seed &&
         repetition == o.repetition;
}

std::vector<ResultRow> run_sweep(const ExperimentConfig& config) {
  config.Validate();
  const Dataset data =
      config.input.empty()
          ? synth_generate(config.synthetic)
          : load_csv(config.input, {config.drop_missing}).data;

  std::vector<Repetition> reps;
  for (int r = 0; r < config.repetitions; ++r) {
    reps.push_back(PrepareRepetition(data, config, r));
  }

  std::vector<Task> tasks;
  for (int r = 0; r < config.repetitions; ++r) {
    for (const Method method : config.methods) {
      for (const double tau : config.tau_grid) {
        if (!UsesRates(method)) {
          tasks.push_back({r, method, tau, -1});
          continue;
        }
        const auto& rates = reps[static_cast<std::size_t>(r)].rates;
        for (std::size_t k = 0; k < rates.size(); ++k) {
          tasks.push_back({r, method, tau, static_cast<int>(k)});
        }
      }
    }
  }

  std::vector<std::vector<ResultRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = RunTask(tasks[i],
                           reps[static_cast<std::size_t>(tasks[i].repetition)],
                           config);
    }
  };
  const auto threads = std::min<std::size_t>(
      static_cast<std::size_t>(config.jobs), tasks.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<ResultRow> rows;
  for (auto& chunk : results) {
    rows.insert(rows.end(), chunk.begin(), chunk.end());
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     return RowKey(a) < RowKey(b);
                   });
  return rows;
}

std::vector<SummaryRow> aggregate_results(const std::vector<ResultRow>& rows) {
  std::vector<ResultRow> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     return RowKey(a) < RowKey(b);
                   });
  auto group_key = [](const ResultRow& r) {
    return std::make_tuple(static_cast<int>(r.method), OrderKey(r.tau),
                           OrderKey(r.rho_plus_hat), OrderKey(r.rho_minus_hat),
                           static_cast<int>(r.split));
  };
  std::map<decltype(group_key(sorted.front())), std::vector<ResultRow>> groups;
  for (const auto& row : sorted) groups[group_key(row)].push_back(row);

  auto mean_std = [](const std::vector<double>& v) {
    if (v.empty()) return std::make_pair(kNaN, kNaN);
    const double mean =
        std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    if (v.size() < 2) return std::make_pair(mean, 0.0);
    double ss = 0.0;
    for (const double x : v) ss += (x - mean) * (x - mean);
    return std::make_pair(mean,
                          std::sqrt(ss / static_cast<double>(v.size() - 1)));
  };

  std::vector<SummaryRow> out;
  for (const auto& [key, members] : groups) {
    SummaryRow s;
    const auto& first = members.front();
    s.method = first.method;
    s.tau = first.tau;
    s.rho_plus_hat = first.rho_plus_hat;
    s.rho_minus_hat = first.rho_minus_hat;
    s.split = first.split;
    std::vector<double> violations;
    std::vector<double> errors;
    std::vector<double> taus;
    for (const auto& r : members) {
      if (r.failed()) continue;
      violations.push_back(r.fairness_violation);
      errors.push_back(r.error);
      taus.push_back(r.tau_prime);
    }
    s.count = static_cast<long>(violations.size());
    s.tau_prime_mean = mean_std(taus).first;
    std::tie(s.fairness_violation_mean, s.fairness_violation_std) =
        mean_std(violations);
    std::tie(s.error_mean, s.error_std) = mean_std(errors);
    out.push_back(s);
  }
  return out;
}

void write_results(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kResultsHeader << "\n";
  for (const auto& r : rows) {
    out << MethodName(r.method) << "," << FormatNumber(r.tau) << ","
        << FormatNumber(r.tau_prime) << "," << FormatNumber(r.rho_plus_hat)
        << "," << FormatNumber(r.rho_minus_hat) << "," << SplitName(r.split)
        << "," << FormatNumber(r.fairness_violation) << ","
        << FormatNumber(r.error) << "," << r.seed << "," << r.repetition
        << "\n";
  }
  if (!out) throw Error(ErrorCode::kIoError, "failed writing results");
}

std::vector<ResultRow> read_results(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || TrimView(line) != kResultsHeader) {
    throw Error(ErrorCode::kSchemaError, "results header mismatch");
  }
  std::vector<ResultRow> rows;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (TrimView(line).empty()) continue;
    const auto f = SplitList(line, ',');
    if (f.size() != 10) {
      throw Error(ErrorCode::kParseError,
                  "results line " + std::to_string(line_no) +
                      ": expected 10 fields");
    }
    ResultRow r;
    r.method = ParseMethod(f[0]);
    r.tau = ParseDouble("tau", f[1]);
    r.tau_prime = ParseDouble("tau_prime", f[2]);
    r.rho_plus_hat = ParseDouble("rho_plus_hat", f[3]);
    r.rho_minus_hat = ParseDouble("rho_minus_hat", f[4]);
    if (f[5] == "train") {
      r.split = Split::kTrain;
    } else if (f[5] == "test") {
      r.split = Split::kTest;
    } else {
      throw BadValue("split", f[5]);
    }
    r.fairness_violation = ParseDouble("fairness_violation", f[6]);
    r.error = ParseDouble("error", f[7]);
    r.seed = ParseInt<std::uint64_t>("seed", f[8]);
    r.repetition = ParseInt<int>("repetition", f[9]);
    rows.push_back(r);
  }
  return rows;
}

void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "method,tau,rho_plus_hat,rho_minus_hat,split,count,tau_prime_mean,"
         "fairness_violation_mean,fairness_violation_std,error_mean,"
         "error_std\n";
  for (const auto& s : rows) {
    out << MethodName(s.method) << "," << FormatNumber(s.tau) << ","
        << FormatNumber(s.rho_plus_hat) << "," << FormatNumber(s.rho_minus_hat)
        << "," << SplitName(s.split) << "," << s.count << ","
        << FormatNumber(s.tau_prime_mean) << ","
        << FormatNumber(s.fairness_violation_mean) << ","
        << FormatNumber(s.fairness_violation_std) << ","
        << FormatNumber(s.error_mean) << "," << FormatNumber(s.error_std)
        << "\n";
  }
  if (!out) throw Error(ErrorCode::kIoError, "failed writing summary");
}

std::string SummaryPath(const std::string& results_path) {
  const std::string suffix = ".csv";
  std::string stem = results_path;
  if (stem.size() >= suffix.size() &&
      stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
    stem.resize(stem.size() - suffix.size());
  }
  return stem + "_summary.csv";
}

void emit_results(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path);
  write_results(out, rows);
  const std::string summary_path = SummaryPath(path);
  std::ofstream summary(summary_path);
  if (!summary) throw Error(ErrorCode::kIoError, "cannot open " + summary_path);
  write_summary(summary, aggregate_results(rows));
}

}  // namespace fairnoise
