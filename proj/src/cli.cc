// Copyright 2026 The ENAS-EHT Authors.
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

#include "enas/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "enas/counting.h"
#include "enas/transition.h"

namespace enas::cli {

std::vector<int> LambdaSweep::values() const {
  std::vector<int> out;
  for (int l = start; l <= stop; l += step) out.push_back(l);
  return out;
}

LambdaSweep LambdaSweep::parse(const std::string& text) {
  LambdaSweep s;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d:%d:%d%c", &s.start, &s.stop, &s.step,
                  &tail) != 3) {
    throw std::invalid_argument("lambda sweep must look like START:STOP:STEP, "
                                "got '" + text + "'");
  }
  if (s.start < 1 || s.step < 1 || s.stop < s.start) {
    throw std::invalid_argument("lambda sweep needs 1 <= START <= STOP and "
                                "STEP >= 1");
  }
  return s;
}

LandscapeSpec LandscapeSpec::parse(const std::string& text) {
  if (text == "distance") return {Kind::kDistance, ""};
  if (text == "synthetic") return {Kind::kSynthetic, ""};
  if (text.starts_with("table:") && text.size() > 6) {
    return {Kind::kTable, text.substr(6)};
  }
  throw std::invalid_argument("landscape must be distance, synthetic or "
                              "table:PATH, got '" + text + "'");
}

PiTSource PiTSource::parse(const std::string& text) {
  if (text == "uniform") return {Kind::kUniform, ""};
  if (text == "gaussian-fit") return {Kind::kGaussianFit, ""};
  if (text.starts_with("empirical:") && text.size() > 10) {
    return {Kind::kEmpirical, text.substr(10)};
  }
  throw std::invalid_argument("pi-t must be uniform, gaussian-fit or "
                              "empirical:PATH, got '" + text + "'");
}

std::vector<MutationOp> ExperimentSpec::operators() const {
  std::vector<MutationOp> out;
  for (const auto& name : op_names) {
    if (name == "m3") {
      for (int q : qs) out.push_back(MutationOp::qbit(q));
    } else {
      out.push_back(MutationOp::parse(name));
    }
  }
  for (const auto& op : out) op.validate(params);
  return out;
}

void ExperimentSpec::validate() const {
  if (trials < 1) throw std::invalid_argument("--trials must be >= 1");
  if (max_generations < 1) throw std::invalid_argument("--max-gens must be >= 1");
  if (jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
  if (op_names.empty()) throw std::invalid_argument("no operator selected");
  operators();
  if (landscape.kind == LandscapeSpec::Kind::kTable &&
      !std::ifstream(landscape.path)) {
    throw std::invalid_argument("cannot open landscape table '" +
                                landscape.path + "'");
  }
  if (pi_t.kind == PiTSource::Kind::kEmpirical && !std::ifstream(pi_t.path)) {
    throw std::invalid_argument("cannot open pi_t file '" + pi_t.path + "'");
  }
}

std::shared_ptr<const FitnessLandscape> make_landscape(
    const ExperimentSpec& spec) {
  const RandomSeed seed = derive_seed(spec.seed, "landscape");
  switch (spec.landscape.kind) {
    case LandscapeSpec::Kind::kDistance:
      return std::make_shared<DistanceLandscape>(
          distance_landscape(spec.params, seed));
    case LandscapeSpec::Kind::kSynthetic:
      return std::make_shared<SyntheticTableLandscape>(spec.params, seed);
    case LandscapeSpec::Kind::kTable:
      return std::make_shared<TabularBenchmark>(
          load_tabular_benchmark(spec.landscape.path, spec.params));
  }
  throw std::logic_error("unhandled landscape kind");
}

DistanceDistribution resolve_pi_t(const ExperimentSpec& spec,
                                  const FitnessLandscape& landscape) {
  switch (spec.pi_t.kind) {
    case PiTSource::Kind::kUniform:
      return uniform_initial_distribution(spec.params, spec.sweep.start);
    case PiTSource::Kind::kEmpirical: {
      std::ifstream in(spec.pi_t.path);
      if (!in) {
        throw std::invalid_argument("cannot open pi_t file '" +
                                    spec.pi_t.path + "'");
      }
      return read_distribution_csv(in, spec.params.n);
    }
    case PiTSource::Kind::kGaussianFit:
      break;
  }
  // Not owning: the landscape outlives every run below.
  std::shared_ptr<const FitnessLandscape> shared(
      &landscape, [](const FitnessLandscape*) {});
  const auto lambdas = spec.pi_t_sweep.values();
  std::vector<std::vector<int>> per_lambda(lambdas.size());
  parallel_for(static_cast<int>(lambdas.size()), spec.jobs, [&](int k) {
    RunConfig cfg;
    cfg.params = spec.params;
    cfg.lambda = lambdas[k];
    cfg.op = MutationOp::one_bit_bit_fair();
    cfg.landscape = shared;
    cfg.max_generations = spec.max_generations;
    cfg.seed = derive_seed(spec.seed, "pi-t", lambdas[k]);
    try {
      per_lambda[k] = sample_distance_distribution(cfg, spec.trials).samples;
    } catch (const EmptySampleError&) {
      // No pre-hitting generation at this lambda; it contributes nothing.
    }
  });
  std::vector<int> pooled;
  for (const auto& s : per_lambda) pooled.insert(pooled.end(), s.begin(), s.end());
  if (pooled.empty()) {
    throw EmptySampleError("the Mutation#1 sampling runs produced no "
                           "pre-hitting generations");
  }
  return gaussian_fit_distribution(pooled, spec.params.n);
}

std::vector<BoundRow> bound_sweep(const ExperimentSpec& spec,
                                  const DistanceDistribution& pi_t) {
  const auto ops = spec.operators();
  const TailTables tails(spec.params, ops);
  const auto lambdas = spec.sweep.values();
  std::vector<std::vector<EhtBoundReport>> reports(lambdas.size());
  parallel_for(static_cast<int>(lambdas.size()), spec.jobs, [&](int k) {
    reports[k] = case_study_bounds(spec.params, lambdas[k], pi_t, ops, tails);
  });
  std::vector<BoundRow> rows;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
      const auto& r = reports[k][i];
      rows.push_back({ops[i].name(), ops[i].q(), lambdas[k],
                      r.expected_initial_distance, r.average_drift_upper,
                      r.eht_lower_bound});
    }
  }
  return rows;
}

std::vector<SimulationRow> simulate_sweep(const ExperimentSpec& spec,
                                          const FitnessLandscape& landscape) {
  const auto ops = spec.operators();
  const auto lambdas = spec.sweep.values();
  std::shared_ptr<const FitnessLandscape> shared(
      &landscape, [](const FitnessLandscape*) {});
  const int points = static_cast<int>(ops.size() * lambdas.size());
  std::vector<SimulationRow> rows(points);
  parallel_for(points, spec.jobs, [&](int k) {
    const MutationOp& op = ops[k / lambdas.size()];
    const int lambda = lambdas[k % lambdas.size()];
    RunConfig cfg;
    cfg.params = spec.params;
    cfg.lambda = lambda;
    cfg.op = op;
    cfg.landscape = shared;
    cfg.max_generations = spec.max_generations;
    cfg.seed = derive_seed(spec.seed, "simulate", lambda);
    const HittingTimeStats s = run_trials(cfg, spec.trials);
    rows[k] = {op.name(), op.q(), lambda, s.trials, s.mean, s.std,
               s.censored_count};
  });
  return rows;
}

std::string to_string(CompareRow::Status s) {
  switch (s) {
    case CompareRow::Status::kOk: return "ok";
    case CompareRow::Status::kViolation: return "violation";
    case CompareRow::Status::kCensored: return "censored";
  }
  return "?";
}

std::vector<CompareRow> compare_rows(const std::vector<BoundRow>& bounds,
                                     const std::vector<SimulationRow>& sims) {
  using Key = std::tuple<std::string, int, int>;
  std::map<Key, const SimulationRow*> by_key;
  for (const auto& s : sims) {
    if (!by_key.emplace(Key{s.op, s.q, s.lambda}, &s).second) {
      throw std::invalid_argument("duplicate simulation row for " + s.op +
                                  " q=" + std::to_string(s.q) +
                                  " lambda=" + std::to_string(s.lambda));
    }
  }
  if (by_key.size() != bounds.size()) {
    throw std::invalid_argument("theory and empirical inputs cover different "
                                "(operator, q, lambda) sets");
  }
  std::vector<CompareRow> out;
  for (const auto& b : bounds) {
    auto it = by_key.find(Key{b.op, b.q, b.lambda});
    if (it == by_key.end()) {
      throw std::invalid_argument("no empirical row for " + b.op + " q=" +
                                  std::to_string(b.q) + " lambda=" +
                                  std::to_string(b.lambda));
    }
    const SimulationRow& s = *it->second;
    CompareRow r{b.op, b.q, b.lambda, b.eht_lower_bound, s.mean_generations,
                 s.trials, s.censored};
    if (s.censored > 0) {
      r.status = CompareRow::Status::kCensored;
    } else if (b.eht_lower_bound > kCompareSlack * s.mean_generations) {
      r.status = CompareRow::Status::kViolation;
    }
    out.push_back(r);
  }
  return out;
}

namespace {

constexpr const char* kSchemaLine = "# schema=v1";

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Reads a schema-v1 table: the schema comment, the given header, then rows.
std::vector<std::vector<std::string>> read_table(
    std::istream& in, const std::vector<std::string>& header) {
  std::string line;
  bool schema = false;
  bool have_header = false;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line == kSchemaLine) schema = true;
      continue;
    }
    auto cells = split(line);
    if (!have_header) {
      if (!schema) {
        throw std::invalid_argument("CSV lacks the '# schema=v1' line");
      }
      if (cells != header) {
        std::string want;
        for (const auto& h : header) want += (want.empty() ? "" : ",") + h;
        throw std::invalid_argument("CSV header '" + line +
                                    "' does not match '" + want + "'");
      }
      have_header = true;
      continue;
    }
    if (cells.size() != header.size()) {
      throw std::invalid_argument("CSV row '" + line + "' has " +
                                  std::to_string(cells.size()) + " cells, "
                                  "expected " + std::to_string(header.size()));
    }
    rows.push_back(std::move(cells));
  }
  if (!have_header) throw std::invalid_argument("CSV has no header row");
  return rows;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

const std::vector<std::string> kBoundHeader = {
    "operator", "q", "lambda", "E_d0", "avg_drift_upper", "eht_lower_bound"};
const std::vector<std::string> kSimulationHeader = {
    "operator", "q", "lambda", "trials", "mean_generations", "std", "censored"};
const std::vector<std::string> kDistributionHeader = {"d", "probability"};

}  // namespace

void write_bounds_csv(std::ostream& out, const std::vector<BoundRow>& rows) {
  out << kSchemaLine << "\noperator,q,lambda,E_d0,avg_drift_upper,"
      << "eht_lower_bound\n";
  for (const auto& r : rows) {
    out << r.op << ',' << r.q << ',' << r.lambda << ',' << num(r.e_d0) << ','
        << num(r.avg_drift_upper) << ',' << num(r.eht_lower_bound) << '\n';
  }
}

void write_simulation_csv(std::ostream& out,
                          const std::vector<SimulationRow>& rows) {
  out << kSchemaLine << "\noperator,q,lambda,trials,mean_generations,std,"
      << "censored\n";
  for (const auto& r : rows) {
    out << r.op << ',' << r.q << ',' << r.lambda << ',' << r.trials << ','
        << num(r.mean_generations) << ',' << num(r.std) << ',' << r.censored
        << '\n';
  }
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
  out << kSchemaLine << "\noperator,q,lambda,eht_lower_bound,mean_generations,"
      << "trials,censored,status\n";
  for (const auto& r : rows) {
    out << r.op << ',' << r.q << ',' << r.lambda << ','
        << num(r.eht_lower_bound) << ',' << num(r.mean_generations) << ','
        << r.trials << ',' << r.censored << ',' << to_string(r.status) << '\n';
  }
}

void write_distribution_csv(std::ostream& out, const DistanceDistribution& d) {
  out << kSchemaLine << "\n# provenance=" << to_string(d.provenance);
  if (d.provenance == DistanceDistribution::Provenance::kGaussianFit) {
    out << " mu=" << num(d.mu) << " sigma=" << num(d.sigma);
  }
  out << "\nd,probability\n";
  for (int k = 0; k <= d.max_distance(); ++k) {
    out << k << ',' << num(d.mass[k]) << '\n';
  }
}

std::vector<BoundRow> read_bounds_csv(std::istream& in) {
  std::vector<BoundRow> out;
  for (const auto& c : read_table(in, kBoundHeader)) {
    out.push_back({c[0], to_int(c[1]), to_int(c[2]), to_double(c[3]),
                   to_double(c[4]), to_double(c[5])});
  }
  return out;
}

std::vector<SimulationRow> read_simulation_csv(std::istream& in) {
  std::vector<SimulationRow> out;
  for (const auto& c : read_table(in, kSimulationHeader)) {
    out.push_back({c[0], to_int(c[1]), to_int(c[2]), to_int(c[3]),
                   to_double(c[4]), to_double(c[5]), to_int(c[6])});
  }
  return out;
}

DistanceDistribution read_distribution_csv(std::istream& in, int n) {
  std::vector<double> w(n + 1, 0.0);
  for (const auto& c : read_table(in, kDistributionHeader)) {
    const int d = to_int(c[0]);
    if (d < 0 || d > n) {
      throw std::invalid_argument("pi_t row d=" + c[0] + " outside [0, " +
                                  std::to_string(n) + "]");
    }
    w[d] += to_double(c[1]);
  }
  return DistanceDistribution::from_weights(
      std::move(w), DistanceDistribution::Provenance::kEmpirical);
}

namespace {

struct Flags {
  int v = 7;
  int L = 2;
  std::optional<int> lambda;
  std::string lambda_sweep = "1:100:4";
  std::string pi_t_sweep = "1:100:4";
  std::vector<std::string> ops;
  std::vector<int> qs;
  int trials = 1000;
  int max_gens = 10000;
  std::uint64_t seed = 2026;
  std::string landscape = "distance";
  std::string pi_t = "gaussian-fit";
  std::string out;
  int jobs = 1;
  std::string oracle = "none";
  int d1 = 0;
  int d2 = 0;
  long long samples = 1000000;
  bool rational = false;
  std::string theory;
  std::string empirical;
  std::string shape = "correlated";
};

ExperimentSpec to_spec(const Flags& f) {
  ExperimentSpec s;
  s.params = SearchSpaceParams::derive(f.v, f.L);
  if (!f.ops.empty()) s.op_names = f.ops;
  if (!f.qs.empty()) s.qs = f.qs;
  s.sweep = f.lambda ? LambdaSweep::single(*f.lambda)
                     : LambdaSweep::parse(f.lambda_sweep);
  if (f.lambda && *f.lambda < 1) {
    throw std::invalid_argument("--lambda must be >= 1");
  }
  s.pi_t_sweep = LambdaSweep::parse(f.pi_t_sweep);
  s.trials = f.trials;
  s.max_generations = f.max_gens;
  s.seed = RandomSeed{f.seed};
  s.landscape = LandscapeSpec::parse(f.landscape);
  s.pi_t = PiTSource::parse(f.pi_t);
  s.jobs = f.jobs;
  s.validate();
  return s;
}

std::string fraction(const Rational& r) {
  return r.str();
}

int cmd_count(const Flags& f, std::ostream& out) {
  const auto p = SearchSpaceParams::derive(f.v, f.L);
  const int lambda = f.lambda.value_or(1);
  if (lambda < 1) throw std::invalid_argument("--lambda must be >= 1");
  const PopulationCounts c = population_counts(p, lambda);
  out << kSchemaLine << "\nd,C,chi_d";
  for (int g = 1; g <= lambda; ++g) out << ",chi_d_gamma" << g;
  out << '\n';
  const BigCount far = solution_space_size(p) - 1;
  for (int d = 0; d <= p.n; ++d) {
    out << d << ',' << c.solutions[d] << ','
        << c.subspace_sizes[d];
    for (int g = 1; g <= lambda; ++g) {
      // The optimal class: g copies of the optimum plus any other members.
      const BigCount v = d == 0 ? multiset_count(far, lambda - g)
                                : c.class_sizes[d][g - 1];
      out << ',' << v;
    }
    out << '\n';
  }
  return kOk;
}

int cmd_transition(const Flags& f, std::ostream& out) {
  const auto p = SearchSpaceParams::derive(f.v, f.L);
  const std::string op_name = f.ops.empty() ? "m1" : f.ops.front();
  if (f.ops.size() > 1) {
    throw std::invalid_argument("transition takes a single --op");
  }
  const int q = f.qs.empty() ? 1 : f.qs.front();
  const MutationOp op = MutationOp::parse(op_name, q);
  op.validate(p);
  const auto prof = DistanceProfile::of(f.d1, f.d2);
  if (!prof.feasible(p)) {
    throw std::invalid_argument("infeasible profile d1=" +
                                std::to_string(f.d1) + ", d2=" +
                                std::to_string(f.d2));
  }
  if (f.oracle != "none" && f.oracle != "exact" && f.oracle != "mc") {
    throw std::invalid_argument("--oracle must be none, exact or mc");
  }
  Genotype opt = Genotype::zeros(p);
  Genotype x = opt;
  for (int i = 0; i < f.d1; ++i) x[i] = 1;
  for (int i = 0; i < f.d2; ++i) x[p.n1 + i] = 1;

  std::optional<StepDistributionQ> exact_analytic;
  StepDistributionF analytic;
  if (f.rational) {
    exact_analytic = step_distribution<Rational>(p, prof, op);
    analytic = to_double(*exact_analytic);
  } else {
    analytic = step_distribution<double>(p, prof, op);
  }
  std::optional<StepDistributionQ> exact_oracle;
  std::optional<StepDistributionF> mc_oracle;
  if (f.oracle == "exact") exact_oracle = exact_enumeration_oracle(x, op, opt, p);
  if (f.oracle == "mc") {
    mc_oracle = mc_transition_oracle(x, op, opt, p, f.samples,
                                     derive_seed(RandomSeed{f.seed}, "mc"));
  }
  out << kSchemaLine << "\nd_y,probability";
  if (exact_oracle) out << ",exact";
  if (mc_oracle) out << ",mc";
  out << '\n';
  for (int d = 0; d <= p.n; ++d) {
    const bool any = analytic.mass[d] != 0.0 ||
                     (exact_oracle && exact_oracle->mass[d] != 0) ||
                     (mc_oracle && mc_oracle->mass[d] != 0.0);
    if (!any) continue;
    out << d << ','
        << (exact_analytic ? fraction(exact_analytic->mass[d])
                           : num(analytic.mass[d]));
    if (exact_oracle) {
      out << ',' << (f.rational ? fraction(exact_oracle->mass[d])
                                : num(exact_oracle->mass[d].convert_to<double>()));
    }
    if (mc_oracle) out << ',' << num(mc_oracle->mass[d]);
    out << '\n';
  }
  return kOk;
}

int cmd_pi_t(const Flags& f, std::ostream& out, std::ostream& err) {
  const ExperimentSpec spec = to_spec(f);
  const auto land = make_landscape(spec);
  const auto pi_t = resolve_pi_t(spec, *land);
  if (pi_t.provenance == DistanceDistribution::Provenance::kGaussianFit) {
    err << "pi_t: mu=" << num(pi_t.mu) << " sigma=" << num(pi_t.sigma) << '\n';
  }
  write_distribution_csv(out, pi_t);
  return kOk;
}

int cmd_eht_bound(const Flags& f, std::ostream& out, std::ostream& err) {
  const ExperimentSpec spec = to_spec(f);
  const auto land = make_landscape(spec);
  const auto pi_t = resolve_pi_t(spec, *land);
  if (pi_t.provenance == DistanceDistribution::Provenance::kGaussianFit) {
    err << "pi_t: mu=" << num(pi_t.mu) << " sigma=" << num(pi_t.sigma) << '\n';
  }
  write_bounds_csv(out, bound_sweep(spec, pi_t));
  return kOk;
}

int cmd_simulate(const Flags& f, std::ostream& out) {
  const ExperimentSpec spec = to_spec(f);
  const auto land = make_landscape(spec);
  write_simulation_csv(out, simulate_sweep(spec, *land));
  return kOk;
}

int cmd_compare(const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.theory.empty() != f.empirical.empty()) {
    throw std::invalid_argument("--theory and --empirical go together");
  }
  std::vector<BoundRow> bounds;
  std::vector<SimulationRow> sims;
  if (!f.theory.empty()) {
    std::ifstream t(f.theory), e(f.empirical);
    if (!t) throw std::invalid_argument("cannot open '" + f.theory + "'");
    if (!e) throw std::invalid_argument("cannot open '" + f.empirical + "'");
    bounds = read_bounds_csv(t);
    sims = read_simulation_csv(e);
  } else {
    const ExperimentSpec spec = to_spec(f);
    const auto land = make_landscape(spec);
    bounds = bound_sweep(spec, resolve_pi_t(spec, *land));
    sims = simulate_sweep(spec, *land);
  }
  const auto rows = compare_rows(bounds, sims);
  write_compare_csv(out, rows);
  int violations = 0;
  int censored = 0;
  for (const auto& r : rows) {
    censored += r.status == CompareRow::Status::kCensored;
    if (!r.violation()) continue;
    ++violations;
    err << "violation: " << r.op << " q=" << r.q << " lambda=" << r.lambda
        << " bound=" << num(r.eht_lower_bound)
        << " mean=" << num(r.mean_generations) << '\n';
  }
  err << violations << " violation(s) in " << rows.size() << " rows ("
      << censored << " with censored trials not judged)\n";
  return violations == 0 ? kOk : kViolations;
}

int cmd_gen_table(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto p = SearchSpaceParams::derive(f.v, f.L);
  const Genotype best = write_synthetic_table(
      out, p, RandomSeed{f.seed}, parse_table_shape(f.shape));
  err << "optimum: " << best.to_string() << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Expected hitting time bounds and simulation for "
               "(lambda+lambda) architecture search",
               "enas-eht"};
  app.set_config("--config", "", "TOML/INI file with flag defaults");
  app.require_subcommand(1);
  Flags f;
  app.add_option("--v", f.v, "nodes per cell")->capture_default_str();
  app.add_option("--L", f.L, "largest operation index")->capture_default_str();
  app.add_option("--lambda", f.lambda, "single population size");
  app.add_option("--lambda-sweep", f.lambda_sweep, "START:STOP:STEP")
      ->capture_default_str();
  app.add_option("--pi-t-sweep", f.pi_t_sweep,
                 "population sizes pooled into the Gaussian pi_t fit")
      ->capture_default_str();
  app.add_option("--op", f.ops, "m1, m2, m3, m4 (repeatable)")
      ->delimiter(',');
  app.add_option("--q", f.qs, "q values for m3 (repeatable)")->delimiter(',');
  app.add_option("--trials", f.trials)->capture_default_str();
  app.add_option("--max-gens", f.max_gens)->capture_default_str();
  app.add_option("--seed", f.seed)->capture_default_str();
  app.add_option("--landscape", f.landscape,
                 "distance, synthetic or table:PATH")
      ->capture_default_str();
  app.add_option("--pi-t", f.pi_t, "uniform, gaussian-fit or empirical:PATH")
      ->capture_default_str();
  app.add_option("--out", f.out, "output file (default stdout)");
  app.add_option("--jobs", f.jobs)->capture_default_str();
  app.add_option("--oracle", f.oracle, "none, exact or mc")
      ->capture_default_str();
  app.add_option("--d1", f.d1, "edge-part distance");
  app.add_option("--d2", f.d2, "op-part distance");
  app.add_option("--samples", f.samples, "Monte-Carlo oracle samples")
      ->capture_default_str();
  app.add_flag("--rational", f.rational, "exact fractions in transition");
  app.add_option("--theory", f.theory, "eht-bound CSV for compare");
  app.add_option("--empirical", f.empirical, "simulate CSV for compare");
  app.add_option("--shape", f.shape, "correlated or random (gen-table)")
      ->capture_default_str();

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"count", "distance-class and population-class sizes"},
      {"transition", "offspring distance distribution for one profile"},
      {"pi-t", "write the pi_t distribution used by eht-bound"},
      {"eht-bound", "lower bounds over the lambda x operator sweep"},
      {"simulate", "empirical hitting times over the sweep"},
      {"compare", "join bounds with empirical means and flag violations"},
      {"gen-table", "write a synthetic benchmark table"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    subs[name] = app.add_subcommand(name, help);
    subs[name]->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  std::ofstream file;
  if (!f.out.empty()) {
    file.open(f.out);
    if (!file) {
      err << "error: cannot write '" << f.out << "'\n";
      return kValidationError;
    }
  }
  std::ostream& sink = f.out.empty() ? out : file;
  try {
    if (subs["count"]->parsed()) return cmd_count(f, sink);
    if (subs["transition"]->parsed()) return cmd_transition(f, sink);
    if (subs["pi-t"]->parsed()) return cmd_pi_t(f, sink, err);
    if (subs["eht-bound"]->parsed()) return cmd_eht_bound(f, sink, err);
    if (subs["simulate"]->parsed()) return cmd_simulate(f, sink);
    if (subs["compare"]->parsed()) return cmd_compare(f, sink, err);
    if (subs["gen-table"]->parsed()) return cmd_gen_table(f, sink, err);
  } catch (const BenchmarkError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == BenchmarkError::Kind::kIo ? kRuntimeError
                                                 : kValidationError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kValidationError;
}

}  // namespace enas::cli
