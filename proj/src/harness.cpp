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


#include "qapt/harness.hpp"

#include <yaml-cpp/yaml.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "qapt/apt.hpp"
#include "qapt/aue.hpp"
#include "qapt/fixtures.hpp"
#include "qapt/io.hpp"

namespace qapt {

const char* bound_shape_name(BoundShape s) {
  switch (s) {
    case BoundShape::Linear: return "linear";
    case BoundShape::FourthRoot: return "fourth_root";
    case BoundShape::SqrtScaled: return "sqrt_scaled";
  }
  return "unknown";
}

double guarantee_bound(BoundShape s, double alpha, double opt, double eps) {
  switch (s) {
    case BoundShape::Linear: return alpha * opt + eps;
    case BoundShape::FourthRoot: return std::pow(std::max(opt, 0.0), 0.25) + eps;
    case BoundShape::SqrtScaled: return std::pow(2.0, 0.25) * std::sqrt(std::max(opt, 0.0)) + eps;
  }
  return eps;
}

const std::vector<LearnerSpec>& learner_registry() {
  static const std::vector<LearnerSpec> reg = {
      {"pauli_string_aue", "most frequent Pauli string of a unitary", "davg", BoundShape::Linear, 1.0, true},
      {"junta_aue", "proper k-junta unitary", "df_operator", BoundShape::Linear, 2.0, true},
      {"junta_aue_improper", "improper k-junta operator", "df_operator", BoundShape::Linear, 1.0, true},
      {"low_degree_aue", "all degree-d coefficients", "df_operator", BoundShape::Linear, 1.0, true},
      {"low_degree_bh_aue", "large degree-d coefficients only", "df_operator", BoundShape::Linear, 1.0, true},
      {"finite_class_aue", "argmin infidelity score over a finite class", "davg", BoundShape::Linear, 1.0, true},
      {"state_aue", "Pauli Choi-state learner read as a superoperator", "df_superop", BoundShape::Linear, 1.0, true},
      {"pauli_string_apt", "most frequent Pauli string of a channel", "df_superop", BoundShape::Linear, 1.0, false},
      {"pauli_channel_apt", "empirical Pauli channel", "df_superop", BoundShape::Linear, 1.0, false},
      {"junta_apt", "heaviest k-subset Fourier block", "df_superop", BoundShape::Linear, 1.0, false},
      {"junta_apt_proper", "junta Fourier block projected to a channel", "df_superop", BoundShape::Linear, 2.0, false},
      {"low_degree_apt", "all degree-d Fourier coefficients", "df_superop", BoundShape::Linear, 1.0, false},
      {"low_degree_apt_proper", "degree-d Fourier block projected to a channel", "df_superop", BoundShape::Linear, 2.0, false},
      {"qac0_apt", "low-degree Choi operator from shadows", "df_operator", BoundShape::Linear, 1.0, false},
      {"finite_class_apt", "argmin infidelity score over a finite unitary class", "davg_mc", BoundShape::FourthRoot, 1.0, false},
      {"state_apt", "Pauli Choi-state learner on a channel", "df_superop", BoundShape::SqrtScaled, 1.0, false},
  };
  return reg;
}

const LearnerSpec& find_learner(const std::string& id) {
  for (const LearnerSpec& s : learner_registry())
    if (s.id == id) return s;
  throw ConfigError("unknown learner id '" + id + "'");
}

bool verify_guarantee(const TrialRecord& r, const LearnerSpec& spec) {
  if (!std::isfinite(r.opt) || !std::isfinite(r.err))
    throw InvalidArgument("record lacks opt or err data");
  if (r.opt_kind == OptKind::LowerBound)
    throw InvalidArgument("a lower bound on opt cannot check the guarantee");
  return r.err <= guarantee_bound(spec.shape, spec.alpha, r.opt, r.eps) + 1e-12;
}

double failure_threshold(double delta, int trials) {
  return delta + 3.0 * std::sqrt(delta * (1.0 - delta) / trials);
}

nlohmann::json ExperimentSummary::to_json() const {
  return {{"trials", trials},
          {"failures", failures},
          {"failure_rate", failure_rate},
          {"threshold", threshold},
          {"mean_queries", mean_queries},
          {"within_eps", within_eps},
          {"realizable", realizable},
          {"necessary_condition_mode", necessary_condition_mode},
          {"suite_ok", suite_ok}};
}

ExperimentSummary summarize(const std::vector<TrialRecord>& records, double delta, double eps,
                            bool realizable) {
  ExperimentSummary s;
  s.trials = static_cast<int>(records.size());
  s.realizable = realizable;
  double q = 0.0;
  for (const TrialRecord& r : records) {
    if (!r.guarantee_ok) ++s.failures;
    if (r.err <= eps) ++s.within_eps;
    if (r.opt_kind == OptKind::UpperBound) s.necessary_condition_mode = true;
    q += static_cast<double>(r.queries);
  }
  if (s.trials == 0) return s;
  s.failure_rate = static_cast<double>(s.failures) / s.trials;
  s.threshold = failure_threshold(delta, s.trials);
  s.mean_queries = q / s.trials;
  s.suite_ok = s.failure_rate <= s.threshold &&
               (!realizable || s.within_eps >= 0.9 * static_cast<double>(s.trials));
  return s;
}

// ---------------------------------------------------------------------------
// Configuration

namespace {

template <typename T>
T get(const YAML::Node& node, const char* key, T fallback) {
  const YAML::Node v = node[key];
  if (!v) return fallback;
  try {
    return v.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(std::string("bad value for '") + key + "'");
  }
}

void check_keys(const YAML::Node& node, const std::set<std::string>& allowed, const char* where) {
  if (!node.IsMap()) throw ConfigError(std::string(where) + " must be a mapping");
  for (const auto& kv : node) {
    std::string key = kv.first.as<std::string>();
    if (!allowed.count(key)) throw ConfigError(std::string("unknown key '") + key + "' in " + where);
  }
}

ExperimentConfig from_yaml(const YAML::Node& root) {
  check_keys(root,
             {"learner", "n", "eps", "delta", "trials", "seed", "target", "class", "estimator",
              "realizable", "timing"},
             "config");
  ExperimentConfig c;
  c.learner = get<std::string>(root, "learner", "");
  c.n = get(root, "n", c.n);
  c.eps = get(root, "eps", c.eps);
  c.delta = get(root, "delta", c.delta);
  c.trials = get(root, "trials", c.trials);
  c.seed = get<std::uint64_t>(root, "seed", c.seed);
  c.realizable = get(root, "realizable", c.realizable);
  c.timing = get(root, "timing", c.timing);
  if (const YAML::Node t = root["target"]) {
    check_keys(t, {"kind", "name", "path", "param", "k"}, "target");
    c.target.kind = get<std::string>(t, "kind", c.target.kind);
    c.target.name = get<std::string>(t, "name", "");
    c.target.path = get<std::string>(t, "path", "");
    c.target.param = get(t, "param", 0.0);
    c.target.k = get(t, "k", 1);
  }
  if (const YAML::Node k = root["class"]) {
    check_keys(k, {"k", "d", "s", "depth", "ancillas", "finite_class"}, "class");
    c.k = get(k, "k", c.k);
    c.d = get(k, "d", c.d);
    c.size = get(k, "s", c.size);
    c.depth = get(k, "depth", c.depth);
    c.ancillas = get(k, "ancillas", c.ancillas);
    c.finite_class = get<std::string>(k, "finite_class", c.finite_class);
  }
  if (const YAML::Node e = root["estimator"]) {
    check_keys(e, {"sample_rule", "bh_constant", "opt_hint", "ensemble", "mc_samples"}, "estimator");
    std::string rule = get<std::string>(e, "sample_rule", "hoeffding");
    if (rule == "hoeffding") c.sample_rule = SampleRule::Hoeffding;
    else if (rule == "conservative") c.sample_rule = SampleRule::Conservative;
    else throw ConfigError("sample_rule must be hoeffding or conservative");
    c.bh_constant = get(e, "bh_constant", c.bh_constant);
    if (e["opt_hint"]) c.opt_hint = get(e, "opt_hint", 0.0);
    std::string ens = get<std::string>(e, "ensemble", "haar");
    if (ens == "haar") c.ensemble = Ensemble::Haar;
    else if (ens == "stabilizer_product") c.ensemble = Ensemble::StabilizerProduct;
    else throw ConfigError("ensemble must be haar or stabilizer_product");
    c.mc_samples = get<std::uint64_t>(e, "mc_samples", c.mc_samples);
  }
  c.validate();
  return c;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_yaml_string(const std::string& text) {
  try {
    return from_yaml(YAML::Load(text));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

ExperimentConfig ExperimentConfig::from_yaml_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_yaml_string(ss.str());
}

void ExperimentConfig::validate() const {
  find_learner(learner);
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (n < 1 || n > limits().max_qubits) throw ConfigError("n out of range");
  if (k < 1 || d < 0 || depth < 1 || ancillas < 0) throw ConfigError("class parameters out of range");
  if (bh_constant <= 0.0) throw ConfigError("bh_constant must be positive");
  if (mc_samples < 2) throw ConfigError("mc_samples must be at least 2");
  if (target.kind != "named" && target.kind != "generator" && target.kind != "file")
    throw ConfigError("target kind must be named, generator or file");
  if (target.kind == "file" && target.path.empty()) throw ConfigError("file target needs a path");
  if (target.kind != "file" && target.name.empty()) throw ConfigError("target needs a name");
}

// ---------------------------------------------------------------------------
// Trials

namespace {

struct Target {
  std::optional<Mat> unitary;
  std::optional<Channel> channel;
  int circuit_size = 0;
  int n = 0;
};

Target from_unitary(Mat u) {
  Target t;
  t.channel = Channel::from_unitary(u, 1e-8);
  t.n = t.channel->n_in();
  t.unitary = std::move(u);
  return t;
}

Target from_channel(Channel c) {
  Target t;
  t.n = c.n_in();
  t.channel = std::move(c);
  return t;
}

QubitSet random_subset(int n, int k, Rng& rng) {
  std::vector<QubitSet> all = subsets_of_size(n, k);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

Channel mix_channels(const Channel& a, const Channel& b, double tau) {
  std::vector<Mat> kraus;
  for (const Mat& k : a.kraus()) kraus.push_back(std::sqrt(1.0 - tau) * k);
  for (const Mat& k : b.kraus()) kraus.push_back(std::sqrt(tau) * k);
  return Channel::from_kraus(std::move(kraus), 1e-8);
}

Target make_target(const ExperimentConfig& cfg, Rng& rng) {
  const TargetSpec& t = cfg.target;
  const int n = cfg.n;
  if (t.kind == "file") return from_channel(channel_from_json(read_json_file(t.path)));
  if (t.kind == "named") {
    if (is_named_unitary(t.name)) return from_unitary(named_unitary(t.name));
    if (t.name == "depolarizing") return from_channel(Channel::depolarizing(n, t.param));
    if (t.name == "depolarizing_x")
      return from_channel(Channel::depolarizing(1, t.param).compose(
          Channel::from_unitary(pauli_matrix(PauliString::parse("X")))));
    if (t.name == "identity") return from_unitary(Mat::Identity(dim_of(n), dim_of(n)));
    throw ConfigError("unknown named target '" + t.name + "'");
  }
  const std::string& g = t.name;
  if (g == "haar_unitary") return from_unitary(haar_unitary(dim_of(n), rng));
  if (g == "random_pauli_unitary") return from_unitary(random_pauli_unitary(n, rng));
  if (g == "perturbed_pauli_unitary")
    return from_unitary(perturbed_unitary(random_pauli_unitary(n, rng), t.param, rng));
  if (g == "random_junta_unitary")
    return from_unitary(random_junta_unitary(n, random_subset(n, t.k, rng), rng));
  if (g == "perturbed_junta_unitary") {
    Mat v = random_junta_unitary(n, random_subset(n, t.k, rng), rng);
    return from_unitary(perturbed_unitary(v, t.param, rng));
  }
  if (g == "random_degree1_unitary") return from_unitary(random_degree1_unitary(n, rng));
  if (g == "perturbed_degree1_unitary")
    return from_unitary(perturbed_unitary(random_degree1_unitary(n, rng), t.param, rng));
  if (g == "random_channel") return from_channel(Channel::random(n, rng));
  if (g == "random_pauli_channel") return from_channel(random_pauli_channel(n, rng));
  if (g == "random_low_degree_pauli_channel")
    return from_channel(random_low_degree_pauli_channel(n, t.k, rng));
  if (g == "random_junta_channel")
    return from_channel(random_junta_channel(n, random_subset(n, t.k, rng), rng));
  if (g == "perturbed_junta_channel") {
    Channel j = random_junta_channel(n, random_subset(n, t.k, rng), rng);
    return from_channel(mix_channels(j, Channel::random(n, rng), t.param));
  }
  if (g == "perturbed_low_degree_channel") {
    Channel p = random_low_degree_pauli_channel(n, t.k, rng);
    return from_channel(mix_channels(p, Channel::random(n, rng), t.param));
  }
  if (g == "depolarized_pauli_unitary") {
    Channel u = Channel::from_unitary(random_pauli_unitary(n, rng));
    return from_channel(Channel::depolarizing(n, t.param).compose(u));
  }
  if (g == "qac0") {
    Qac0Circuit c = random_qac0(n, cfg.depth, cfg.ancillas, rng);
    Target out = from_channel(c.channel);
    out.circuit_size = c.size;
    return out;
  }
  throw ConfigError("unknown target generator '" + g + "'");
}

std::vector<Mat> finite_class_members(const ExperimentConfig& cfg, int n) {
  if (cfg.finite_class == "paulis") return pauli_class(n);
  throw ConfigError("unknown finite class '" + cfg.finite_class + "'");
}

Rng trial_rng(const ExperimentConfig& cfg, int trial, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

struct Outcome {
  LearnReport report;
  double err = 0.0;
  OptKind opt_kind = OptKind::Exact;
  double opt = 0.0;
};

Outcome run_learner(const ExperimentConfig& cfg, const Target& t, QueryOracle& oracle,
                    std::uint64_t eval_seed) {
  const std::string& id = cfg.learner;
  const double eps = cfg.eps, delta = cfg.delta;
  Outcome o;
  const Mat* u = t.unitary ? &*t.unitary : nullptr;
  auto target_fourier = [&] { return fourier_matrix(*t.channel); };

  if (id == "pauli_string_aue") {
    o.report = learn_pauli_string(oracle, eps, delta);
    o.err = davg_unitary(*u, o.report.hypothesis.op());
    o.opt = opt_pauli_strings_davg(*u).value;
  } else if (id == "junta_aue" || id == "junta_aue_improper") {
    o.report = learn_unitary_junta(oracle, cfg.k, eps, delta, id == "junta_aue");
    o.err = df_operator(*u, o.report.hypothesis.op());
    o.opt_kind = OptKind::UpperBound;
    o.opt = opt_junta_bounds_unitary(*u, cfg.k).upper.value;
  } else if (id == "low_degree_aue" || id == "low_degree_bh_aue") {
    if (id == "low_degree_aue") {
      o.report = learn_low_degree_all(oracle, cfg.d, eps, delta);
    } else {
      BhOptions bh;
      bh.bh_constant = cfg.bh_constant;
      bh.opt_hint = cfg.opt_hint;
      o.report = learn_low_degree_bh(oracle, cfg.d, eps, delta, bh);
    }
    o.err = df_operator(*u, o.report.hypothesis.op());
    o.opt_kind = OptKind::UpperBound;
    o.opt = opt_lowdeg_bounds_unitary(*u, cfg.d).upper.value;
  } else if (id == "finite_class_aue") {
    std::vector<Mat> cls = finite_class_members(cfg, t.n);
    o.report = learn_finite_class(oracle, cls, eps, delta, cfg.ensemble, cfg.sample_rule);
    o.err = davg_unitary(*u, o.report.hypothesis.op());
    o.opt = opt_finite_class(*u, cls).value;
  } else if (id == "state_aue" || id == "state_apt") {
    o.report = id == "state_aue"
                   ? aue_from_state_learner(oracle, pauli_choi_state_learner(), "pauli_strings", eps, delta)
                   : apt_from_state_learner(oracle, pauli_choi_state_learner(), "pauli_strings", eps, delta);
    Mat f = target_fourier();
    o.err = df_fourier(f, o.report.hypothesis.fourier());
    o.opt = opt_pauli_strings_df(f).value;
  } else if (id == "pauli_string_apt") {
    o.report = apt_pauli_string(oracle, eps, delta);
    Mat f = target_fourier();
    o.err = df_fourier(f, o.report.hypothesis.fourier());
    o.opt = opt_pauli_strings_df(f).value;
  } else if (id == "pauli_channel_apt") {
    o.report = apt_pauli_channel(oracle, eps, delta);
    Mat f = target_fourier();
    o.err = df_fourier(f, o.report.hypothesis.fourier());
    o.opt = opt_pauli_channels(f).value;
  } else if (id == "junta_apt" || id == "junta_apt_proper") {
    o.report = apt_junta_channel(oracle, cfg.k, eps, delta);
    if (id == "junta_apt_proper") o.report = proper_apt_wrap(o.report, eps);
    Mat f = target_fourier();
    o.err = df_fourier(f, o.report.hypothesis.fourier());
    o.opt_kind = OptKind::UpperBound;
    o.opt = opt_junta_bounds_channel(f, cfg.k).upper.value;
  } else if (id == "low_degree_apt" || id == "low_degree_apt_proper") {
    o.report = apt_low_degree_channel(oracle, cfg.d, eps, delta);
    if (id == "low_degree_apt_proper") o.report = proper_apt_wrap(o.report, eps);
    Mat f = target_fourier();
    o.err = df_fourier(f, o.report.hypothesis.fourier());
    o.opt_kind = OptKind::UpperBound;
    o.opt = opt_lowdeg_bounds_channel(f, cfg.d).upper.value;
  } else if (id == "qac0_apt") {
    double size = cfg.size > 0.0 ? cfg.size : t.circuit_size;
    if (!(size > 0.0)) throw ConfigError("qac0_apt needs class.s or a qac0 target");
    o.report = apt_qac0(oracle, size, cfg.depth, eps, delta);
    Mat j = choi_matrix(*t.channel);
    o.err = df_operator(j, o.report.hypothesis.op());
    const int kt = o.report.internals["degree"].get<int>();
    const int m = t.channel->n_in() + t.channel->n_out();
    std::vector<cplx> a = decompose_dense(j);
    double tail = 0.0;
    for (std::uint64_t c = 0; c < a.size(); ++c)
      if (PauliString(m, c).degree() > kt) tail += std::norm(a[c]);
    o.opt = std::sqrt(0.5 * tail);
  } else if (id == "finite_class_apt") {
    std::vector<Mat> cls = finite_class_members(cfg, t.n);
    o.report = apt_finite_class(oracle, cls, eps, delta, cfg.ensemble, cfg.sample_rule);
    o.err = davg_channel_mc(*t.channel, Channel::from_unitary(o.report.hypothesis.op(), 1e-8),
                            cfg.ensemble, cfg.mc_samples, eval_seed)
                .value;
    o.opt_kind = OptKind::UpperBound;
    o.opt = opt_finite_class_channel(*t.channel, cls, cfg.ensemble, cfg.mc_samples, eval_seed + 1)
                .upper.value;
  } else {
    throw ConfigError("learner '" + id + "' has no driver");
  }
  return o;
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& cfg, int trial) {
  const LearnerSpec& spec = find_learner(cfg.learner);
  const auto start = std::chrono::steady_clock::now();
  Rng target_rng = trial_rng(cfg, trial, 1);
  Target t = make_target(cfg, target_rng);
  if (spec.needs_unitary && !t.unitary)
    throw ConfigError("learner '" + spec.id + "' needs a unitary target");
  const std::uint64_t oracle_seed = trial_rng(cfg, trial, 2)();
  const std::uint64_t eval_seed = trial_rng(cfg, trial, 3)();
  QueryOracle oracle = t.unitary ? QueryOracle(*t.unitary, oracle_seed) : QueryOracle(*t.channel, oracle_seed);
  Outcome o = run_learner(cfg, t, oracle, eval_seed);
  if (o.report.queries_used != oracle.queries())
    throw Error("learner query report disagrees with the oracle counter");

  TrialRecord r;
  r.trial = trial;
  r.learner = cfg.learner;
  r.n = t.n;
  r.eps = cfg.eps;
  r.delta = cfg.delta;
  r.queries = o.report.queries_used;
  r.err = o.err;
  r.opt_kind = o.opt_kind;
  r.opt = o.opt;
  r.guarantee_ok = verify_guarantee(r, spec);
  if (cfg.timing)
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult res;
  for (int i = 0; i < cfg.trials; ++i) res.records.push_back(run_trial(cfg, i));
  res.summary = summarize(res.records, cfg.delta, cfg.eps, cfg.realizable);
  return res;
}

// ---------------------------------------------------------------------------
// CSV

std::string csv_header() {
  return "trial,learner,n,eps,delta,queries,err,opt_kind,opt,guarantee_ok,wall_ms";
}

std::string to_csv(const std::vector<TrialRecord>& records) {
  std::string out = csv_header() + "\n";
  char buf[512];
  for (const TrialRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%d,%s,%d,%.17g,%.17g,%llu,%.17g,%s,%.17g,%d,%.3f\n", r.trial,
                  r.learner.c_str(), r.n, r.eps, r.delta, static_cast<unsigned long long>(r.queries),
                  r.err, opt_kind_name(r.opt_kind), r.opt, r.guarantee_ok ? 1 : 0, r.wall_ms);
    out += buf;
  }
  return out;
}

std::vector<TrialRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) return {};
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != csv_header()) throw InvalidArgument("CSV header does not match the trial schema");
  std::vector<TrialRecord> out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 11) throw InvalidArgument("CSV line " + std::to_string(lineno) + ": expected 11 fields");
    try {
      TrialRecord r;
      r.trial = std::stoi(f[0]);
      r.learner = f[1];
      r.n = std::stoi(f[2]);
      r.eps = std::stod(f[3]);
      r.delta = std::stod(f[4]);
      r.queries = std::stoull(f[5]);
      r.err = std::stod(f[6]);
      if (f[7] == "exact") r.opt_kind = OptKind::Exact;
      else if (f[7] == "upper_bound") r.opt_kind = OptKind::UpperBound;
      else if (f[7] == "lower_bound") r.opt_kind = OptKind::LowerBound;
      else throw InvalidArgument("bad opt_kind");
      r.opt = std::stod(f[8]);
      if (f[9] != "0" && f[9] != "1") throw InvalidArgument("bad guarantee_ok");
      r.guarantee_ok = f[9] == "1";
      r.wall_ms = std::stod(f[10]);
      out.push_back(r);
    } catch (const std::logic_error&) {
      throw InvalidArgument("CSV line " + std::to_string(lineno) + ": malformed field");
    }
  }
  return out;
}

}  // namespace qapt
