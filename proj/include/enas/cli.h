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

// Command-line front end: flag parsing, sweep orchestration and the
// schema-v1 CSV formats shared with the plotting scripts.

#ifndef ENAS_CLI_H_
#define ENAS_CLI_H_

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "enas/drift.h"
#include "enas/genotype.h"
#include "enas/landscape.h"
#include "enas/operators.h"
#include "enas/rng.h"
#include "enas/simulator.h"

namespace enas::cli {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,  // compare found rows with bound > 1.05 x mean
  kValidationError = 2,
  kRuntimeError = 3,
};

// START:STOP:STEP, STOP inclusive.
struct LambdaSweep {
  int start = 1;
  int stop = 100;
  int step = 4;

  std::vector<int> values() const;
  static LambdaSweep parse(const std::string& text);
  static LambdaSweep single(int lambda) { return {lambda, lambda, 1}; }
};

struct LandscapeSpec {
  enum class Kind { kDistance, kTable, kSynthetic };
  Kind kind = Kind::kDistance;
  std::string path;  // kTable only

  // "distance", "synthetic" or "table:PATH".
  static LandscapeSpec parse(const std::string& text);
};

struct PiTSource {
  enum class Kind { kUniform, kGaussianFit, kEmpirical };
  Kind kind = Kind::kGaussianFit;
  std::string path;  // kEmpirical only

  // "uniform", "gaussian-fit" or "empirical:PATH".
  static PiTSource parse(const std::string& text);
};

enum class OracleMode { kNone, kExact, kMc };

struct ExperimentSpec {
  SearchSpaceParams params = SearchSpaceParams::derive(7, 2);
  std::vector<std::string> op_names = {"m1", "m2", "m3", "m4"};
  std::vector<int> qs = {1, 2, 3, 4, 5};
  LambdaSweep sweep;
  // Population sizes whose Mutation#1 runs are pooled into the Gaussian fit.
  LambdaSweep pi_t_sweep;
  int trials = 1000;
  int max_generations = 10000;
  RandomSeed seed{2026};
  LandscapeSpec landscape;
  PiTSource pi_t;
  int jobs = 1;

  // Expands op_names x qs into concrete operators (m3 once per q).
  std::vector<MutationOp> operators() const;
  void validate() const;
};

std::shared_ptr<const FitnessLandscape> make_landscape(
    const ExperimentSpec& spec);

// The pi_t used by every bound of a sweep. For gaussian-fit this runs the
// Mutation#1 sampling protocol at every lambda of spec.pi_t_sweep with
// spec.trials trials each and fits the pooled samples.
DistanceDistribution resolve_pi_t(const ExperimentSpec& spec,
                                  const FitnessLandscape& landscape);

struct BoundRow {
  std::string op;
  int q = 0;
  int lambda = 0;
  double e_d0 = 0.0;
  double avg_drift_upper = 0.0;
  double eht_lower_bound = 0.0;
};

struct SimulationRow {
  std::string op;
  int q = 0;
  int lambda = 0;
  int trials = 0;
  double mean_generations = 0.0;  // NaN when every trial is censored
  double std = 0.0;
  int censored = 0;
};

struct CompareRow {
  std::string op;
  int q = 0;
  int lambda = 0;
  double eht_lower_bound = 0.0;
  double mean_generations = 0.0;
  int trials = 0;
  int censored = 0;
  enum class Status { kOk, kViolation, kCensored };
  Status status = Status::kOk;

  bool violation() const { return status == Status::kViolation; }
};

std::string to_string(CompareRow::Status s);

inline constexpr double kCompareSlack = 1.05;

std::vector<BoundRow> bound_sweep(const ExperimentSpec& spec,
                                  const DistanceDistribution& pi_t);
// Sweep point (op, lambda) runs with seed derive_seed(spec.seed, "simulate",
// lambda), shared by every operator.
std::vector<SimulationRow> simulate_sweep(const ExperimentSpec& spec,
                                          const FitnessLandscape& landscape);
// Joins on (operator, q, lambda). A row with no censored trial violates when
// the bound exceeds 1.05 x mean. Rows with censored trials are marked
// kCensored and not judged: their mean covers only the runs that hit, so it
// understates the hitting time. Throws std::invalid_argument when the key
// sets differ.
std::vector<CompareRow> compare_rows(const std::vector<BoundRow>& bounds,
                                     const std::vector<SimulationRow>& sims);

// Schema-v1 CSV. Every file starts with "# schema=v1".
void write_bounds_csv(std::ostream& out, const std::vector<BoundRow>& rows);
void write_simulation_csv(std::ostream& out,
                          const std::vector<SimulationRow>& rows);
void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);
void write_distribution_csv(std::ostream& out, const DistanceDistribution& d);
std::vector<BoundRow> read_bounds_csv(std::istream& in);
std::vector<SimulationRow> read_simulation_csv(std::istream& in);
DistanceDistribution read_distribution_csv(std::istream& in, int n);

// Entry point behind the executable. Output goes to `out` unless --out is
// given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace enas::cli

#endif  // ENAS_CLI_H_
