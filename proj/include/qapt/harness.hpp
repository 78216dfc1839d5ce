// Copyright 2026 The qapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qapt/estimators.hpp"
#include "qapt/optimal.hpp"

namespace qapt {

// err <= alpha opt + eps (Linear), opt^(1/4) + eps (FourthRoot) or
// 2^(1/4) sqrt(opt) + eps (SqrtScaled).
enum class BoundShape { Linear, FourthRoot, SqrtScaled };
const char* bound_shape_name(BoundShape s);
double guarantee_bound(BoundShape s, double alpha, double opt, double eps);

struct LearnerSpec {
  std::string id;
  std::string summary;
  std::string metric;  // davg, df_operator, df_superop, davg_mc
  BoundShape shape = BoundShape::Linear;
  double alpha = 1.0;
  bool needs_unitary = false;
};
const std::vector<LearnerSpec>& learner_registry();
// Throws ConfigError for unknown ids.
const LearnerSpec& find_learner(const std::string& id);

struct TargetSpec {
  std::string kind = "named";  // named | generator | file
  std::string name;            // fixture or generator id
  std::string path;            // channel file for kind = file
  double param = 0.0;          // noise rate or perturbation size
  int k = 1;                   // junta size or degree for generators
};

struct ExperimentConfig {
  std::string learner;
  int n = 1;
  int k = 1;
  int d = 1;
  int depth = 2;
  int ancillas = 1;
  double size = 0.0;  // QAC0 circuit size; 0 uses the fixture's gate count
  double eps = 0.15;
  double delta = 0.1;
  int trials = 100;
  std::uint64_t seed = 1;
  TargetSpec target;
  bool realizable = false;  // also require err <= eps in 90% of trials
  std::string finite_class = "paulis";
  SampleRule sample_rule = SampleRule::Hoeffding;
  double bh_constant = 1.0;
  std::optional<double> opt_hint;
  Ensemble ensemble = Ensemble::Haar;
  std::uint64_t mc_samples = 2000;
  bool timing = false;

  static ExperimentConfig from_yaml_file(const std::string& path);
  static ExperimentConfig from_yaml_string(const std::string& text);
  // Throws ConfigError.
  void validate() const;
};

struct TrialRecord {
  int trial = 0;
  std::string learner;
  int n = 0;
  double eps = 0.0;
  double delta = 0.0;
  std::uint64_t queries = 0;
  double err = 0.0;
  OptKind opt_kind = OptKind::Exact;
  double opt = 0.0;
  bool guarantee_ok = false;
  double wall_ms = 0.0;
};

// Throws InvalidArgument when the record has no usable opt value. Upper
// bounds give a necessary condition of the guarantee.
bool verify_guarantee(const TrialRecord& r, const LearnerSpec& spec);

// delta + 3 sqrt(delta (1 - delta) / trials)
double failure_threshold(double delta, int trials);

struct ExperimentSummary {
  int trials = 0;
  int failures = 0;
  double failure_rate = 0.0;
  double threshold = 0.0;
  double mean_queries = 0.0;
  int within_eps = 0;
  bool realizable = false;
  bool necessary_condition_mode = false;
  bool suite_ok = false;
  nlohmann::json to_json() const;
};

ExperimentSummary summarize(const std::vector<TrialRecord>& records, double delta,
                            double eps, bool realizable);

struct ExperimentResult {
  std::vector<TrialRecord> records;
  ExperimentSummary summary;
};

TrialRecord run_trial(const ExperimentConfig& cfg, int trial);
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Header trial,learner,n,eps,delta,queries,err,opt_kind,opt,guarantee_ok,wall_ms
std::string csv_header();
std::string to_csv(const std::vector<TrialRecord>& records);
// Throws InvalidArgument on malformed input.
std::vector<TrialRecord> parse_csv(const std::string& text);

// Writes err_vs_opt.svg and queries_hist.svg into out_dir; returns the paths.
std::vector<std::string> emit_plots(const std::vector<TrialRecord>& records,
                                    const std::string& out_dir);

}  // namespace qapt
