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

// The (lambda+lambda) generational loop and its Monte-Carlo harness.
//
// One generation: every parent produces exactly one offspring with the
// configured operator, then truncation selection keeps the lambda fittest
// of the 2 lambda candidates. Generation 0 is the initial population, so a
// run whose initial population holds the optimum has T = 0.

#ifndef ENAS_SIMULATOR_H_
#define ENAS_SIMULATOR_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "enas/drift.h"
#include "enas/genotype.h"
#include "enas/landscape.h"
#include "enas/operators.h"
#include "enas/rng.h"
#include "enas/transition.h"

namespace enas {

struct RunConfig {
  SearchSpaceParams params;
  int lambda = 1;
  MutationOp op = MutationOp::one_bit_bit_fair();
  std::shared_ptr<const FitnessLandscape> landscape;  // shared read-only
  int max_generations = 10000;
  RandomSeed seed;
  // Stop a run early once the optimum has become unreachable (see
  // HittingTimeRecord::absorbed). The record is censored either way.
  bool stop_when_absorbed = true;

  // Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

struct HittingTimeRecord {
  std::optional<int> generations;  // empty when censored
  // Censored because the optimum can no longer be reached: q-slot mutation
  // with q >= 2 on a landscape ordered by distance, once every member is
  // closer than q to the optimum. Offspring of such members never land on
  // the optimum and anything they produce at distance >= q is rejected.
  bool absorbed = false;
  // d(xi_t) = min member distance, t = 0 .. last generation run.
  std::vector<int> distance_trajectory;
  // max member fitness, same indexing.
  std::vector<double> best_fitness;

  bool censored() const { return !generations.has_value(); }
};

HittingTimeRecord run_enas(const RunConfig& cfg);

struct HittingTimeStats {
  int trials = 0;
  int censored_count = 0;
  int absorbed_count = 0;  // subset of censored_count
  // Over uncensored trials only; NaN when every trial is censored.
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation
  double median = 0.0;
  std::map<int, int> histogram;  // generations -> uncensored trial count

  int hits() const { return trials - censored_count; }
};

HittingTimeStats summarize(std::span<const HittingTimeRecord> records);

// Trial i runs with seed derive_seed(cfg.seed, "trial", i). Trials may run on
// up to `jobs` threads; the result does not depend on `jobs`.
std::vector<HittingTimeRecord> run_trial_records(const RunConfig& cfg,
                                                 int trials, int jobs = 1);
HittingTimeStats run_trials(const RunConfig& cfg, int trials, int jobs = 1);

class EmptySampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DistanceSample {
  DistanceDistribution distribution;  // empirical masses on [1, n]
  std::vector<int> samples;           // raw pooled d(xi_t) values
};

// Pools d(xi_t) over every pre-hitting generation of every trial. Throws
// EmptySampleError when no trial has a pre-hitting generation.
DistanceSample sample_distance_distribution(const RunConfig& cfg, int trials,
                                            int jobs = 1);

// Empirical distribution of the offspring distance over `samples`
// independent mutations of x. Requires samples >= 1e4.
StepDistributionF mc_transition_oracle(const Genotype& x, const MutationOp& op,
                                       const Genotype& opt,
                                       const SearchSpaceParams& p,
                                       std::int64_t samples, RandomSeed seed);

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace enas

#endif  // ENAS_SIMULATOR_H_
