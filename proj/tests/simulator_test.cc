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

#include "enas/simulator.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"

namespace enas {
namespace {

const SearchSpaceParams kV3 = SearchSpaceParams::derive(3, 2);
const SearchSpaceParams kV7 = SearchSpaceParams::derive(7, 2);

RunConfig config(const SearchSpaceParams& p, int lambda, MutationOp op,
                 std::uint64_t seed = 1) {
  RunConfig cfg;
  cfg.params = p;
  cfg.lambda = lambda;
  cfg.op = op;
  cfg.landscape = std::make_shared<DistanceLandscape>(
      distance_landscape(p, RandomSeed{seed}));
  cfg.seed = RandomSeed{seed};
  return cfg;
}

bool initial_population_has_optimum(const RunConfig& cfg) {
  Rng rng = make_rng(cfg.seed);
  const Population pop = init_population(cfg.params, cfg.lambda, rng);
  return std::find(pop.begin(), pop.end(), cfg.landscape->optimum()) != pop.end();
}

TEST(RunEnas, OptimumInInitialPopulationGivesZero) {
  auto cfg = config(kV3, 6, MutationOp::one_bit_bit_fair());
  int with = 0, without = 0;
  for (std::uint64_t s = 0; s < 200 && (with < 3 || without < 3); ++s) {
    cfg.seed = RandomSeed{s};
    const auto rec = run_enas(cfg);
    ASSERT_FALSE(rec.censored());
    if (initial_population_has_optimum(cfg)) {
      ++with;
      EXPECT_EQ(*rec.generations, 0);
      EXPECT_EQ(rec.distance_trajectory, std::vector<int>{0});
    } else {
      ++without;
      EXPECT_GT(*rec.generations, 0);
    }
  }
  EXPECT_GE(with, 3);
  EXPECT_GE(without, 3);
}

TEST(RunEnas, TrajectoryInvariants) {
  for (const auto& op : {MutationOp::one_bit_bit_fair(),
                         MutationOp::one_bit_offspring_fair(),
                         MutationOp::qbit(1), MutationOp::bitwise()}) {
    auto cfg = config(kV7, 4, op, 17);
    for (int trial = 0; trial < 5; ++trial) {
      cfg.seed = derive_seed(RandomSeed{17}, "t", trial);
      const auto rec = run_enas(cfg);
      ASSERT_FALSE(rec.censored()) << op.name();
      EXPECT_EQ(rec.distance_trajectory.size(),
                static_cast<std::size_t>(*rec.generations + 1));
      EXPECT_EQ(rec.best_fitness.size(), rec.distance_trajectory.size());
      EXPECT_EQ(rec.distance_trajectory.back(), 0);
      EXPECT_TRUE(std::is_sorted(rec.distance_trajectory.rbegin(),
                                 rec.distance_trajectory.rend()));
      EXPECT_TRUE(std::is_sorted(rec.best_fitness.begin(), rec.best_fitness.end()));
      for (std::size_t t = 0; t < rec.best_fitness.size(); ++t) {
        EXPECT_EQ(rec.best_fitness[t], kV7.n - rec.distance_trajectory[t]);
      }
    }
  }
}

TEST(RunEnas, DeterministicAndIndependentOfThreads) {
  auto cfg = config(kV7, 5, MutationOp::bitwise(), 99);
  const auto a = run_trial_records(cfg, 24, 1);
  const auto b = run_trial_records(cfg, 24, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].generations, b[i].generations);
    EXPECT_EQ(a[i].distance_trajectory, b[i].distance_trajectory);
  }
  auto single = cfg;
  single.seed = derive_seed(cfg.seed, "trial", 7);
  EXPECT_EQ(run_enas(single).generations, a[7].generations);
}

TEST(RunEnas, GenerationCapCensors) {
  auto cfg = config(kV7, 1, MutationOp::one_bit_bit_fair());
  cfg.max_generations = 1;
  const auto stats = run_trials(cfg, 50);
  EXPECT_EQ(stats.trials, 50);
  EXPECT_EQ(stats.censored_count, 50);
  EXPECT_EQ(stats.absorbed_count, 0);
  EXPECT_TRUE(std::isnan(stats.mean));
  EXPECT_TRUE(stats.histogram.empty());
}

TEST(RunEnas, QBitAbsorptionIsDetected) {
  auto cfg = config(kV7, 1, MutationOp::qbit(2), 5);
  const auto records = run_trial_records(cfg, 60);
  int absorbed = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (!r.absorbed) continue;
    ++absorbed;
    EXPECT_TRUE(r.censored());
    EXPECT_EQ(r.distance_trajectory.back(), 1);
    // Running on without the early stop never reaches the optimum.
    auto more = cfg;
    more.seed = derive_seed(cfg.seed, "trial", static_cast<int>(i));
    more.stop_when_absorbed = false;
    more.max_generations = 300;
    const auto cont = run_enas(more);
    EXPECT_TRUE(cont.censored());
    EXPECT_FALSE(cont.absorbed);
  }
  EXPECT_GT(absorbed, 0);
  const auto stats = summarize(records);
  EXPECT_EQ(stats.absorbed_count, absorbed);
  EXPECT_GE(stats.censored_count, absorbed);
}

TEST(RunEnas, NoAbsorptionOnUnorderedLandscapes) {
  std::stringstream table;
  write_synthetic_table(table, kV3, RandomSeed{4}, TableShape::kRandom);
  auto cfg = config(kV3, 1, MutationOp::qbit(2));
  cfg.landscape = std::make_shared<TabularBenchmark>(read_tabular_benchmark(table));
  cfg.max_generations = 50;
  for (const auto& r : run_trial_records(cfg, 30)) EXPECT_FALSE(r.absorbed);
}

TEST(RunEnas, SingletonChainMatchesExactSolution) {
  auto cfg = config(kV3, 1, MutationOp::one_bit_bit_fair(), 2026);
  const double exact = testing::exact_singleton_eht(kV3, *cfg.landscape);
  const auto stats = run_trials(cfg, 20000);
  ASSERT_EQ(stats.censored_count, 0);
  const double se = stats.std / std::sqrt(static_cast<double>(stats.trials));
  EXPECT_NEAR(stats.mean, exact, 4 * se) << "exact=" << exact;
}

TEST(Summarize, HandBuiltRecords) {
  std::vector<HittingTimeRecord> recs(5);
  recs[0].generations = 2;
  recs[1].generations = 4;
  recs[2].generations = 4;
  recs[3].generations = 10;
  recs[4].absorbed = true;
  const auto s = summarize(recs);
  EXPECT_EQ(s.trials, 5);
  EXPECT_EQ(s.hits(), 4);
  EXPECT_EQ(s.censored_count, 1);
  EXPECT_EQ(s.absorbed_count, 1);
  EXPECT_DOUBLE_EQ(s.mean, 5.0);
  EXPECT_DOUBLE_EQ(s.std, std::sqrt(12.0));
  EXPECT_DOUBLE_EQ(s.median, 4.0);
  EXPECT_EQ(s.histogram.at(4), 2);
}

TEST(DistanceSampling, PoolsPreHittingGenerations) {
  auto cfg = config(kV7, 3, MutationOp::one_bit_bit_fair(), 8);
  const auto sample = sample_distance_distribution(cfg, 40);
  const auto records = run_trial_records(cfg, 40);
  std::size_t expected = 0;
  for (const auto& r : records) expected += r.distance_trajectory.size() - 1;
  EXPECT_EQ(sample.samples.size(), expected);
  const auto& m = sample.distribution.mass;
  EXPECT_EQ(sample.distribution.max_distance(), kV7.n);
  EXPECT_EQ(m[0], 0.0);
  EXPECT_NEAR(std::accumulate(m.begin(), m.end(), 0.0), 1.0, 1e-12);
  EXPECT_TRUE(std::all_of(sample.samples.begin(), sample.samples.end(),
                          [](int d) { return d >= 1; }));
}

TEST(DistanceSampling, EmptySampleThrows) {
  auto cfg = config(kV3, 400, MutationOp::one_bit_bit_fair(), 3);
  EXPECT_THROW(sample_distance_distribution(cfg, 4), EmptySampleError);
}

TEST(McOracle, AgreesWithExactEnumeration) {
  const auto p = SearchSpaceParams::derive(4, 2);
  const Genotype opt = Genotype::zeros(p);
  Genotype x = opt;
  x[0] = x[3] = 1;
  x[p.n1] = 2;
  const std::int64_t samples = 200000;
  for (const auto& op : {MutationOp::one_bit_bit_fair(), MutationOp::qbit(3),
                         MutationOp::bitwise()}) {
    const auto exact = to_double(exact_enumeration_oracle(x, op, opt, p));
    const auto mc = mc_transition_oracle(x, op, opt, p, samples, RandomSeed{12});
    for (int d = 0; d <= p.n; ++d) {
      const double sigma = testing::binomial_sigma(exact.at(d), samples);
      EXPECT_NEAR(mc.at(d), exact.at(d), 5 * sigma + 1e-12)
          << op.name() << " d=" << d;
    }
  }
  EXPECT_THROW(mc_transition_oracle(x, MutationOp::bitwise(), opt, p, 100,
                                    RandomSeed{1}),
               std::invalid_argument);
}

TEST(McOracle, BitwiseAtSmallSpaceAndSupportLaw) {
  const Genotype opt = Genotype::zeros(kV3);
  Genotype x = opt;
  x[0] = 1;
  x[kV3.n1] = 1;
  const std::int64_t samples = 1000000;
  const auto analytic = bitwise_step<double>(kV3, DistanceProfile::of(1, 1));
  const auto mc = mc_transition_oracle(x, MutationOp::bitwise(), opt, kV3,
                                       samples, RandomSeed{13});
  for (int d = 0; d <= kV3.n; ++d) {
    EXPECT_NEAR(mc.at(d), analytic.at(d),
                3 * testing::binomial_sigma(analytic.at(d), samples) + 1e-12);
  }
  const auto one = mc_transition_oracle(x, MutationOp::one_bit_offspring_fair(),
                                        opt, kV3, 10000, RandomSeed{14});
  EXPECT_EQ(one.at(0), 0.0);
  EXPECT_EQ(one.at(4), 0.0);
}

TEST(DistanceSampling, FittedMeanInsideTheSpace) {
  auto cfg = config(kV7, 20, MutationOp::one_bit_bit_fair(), 20);
  const auto sample = sample_distance_distribution(cfg, 100);
  const auto fit = gaussian_fit_distribution(sample.samples, kV7.n);
  EXPECT_GE(fit.mu, 1.0);
  EXPECT_LE(fit.mu, kV7.n);
}

TEST(RunConfig, Validation) {
  auto cfg = config(kV3, 2, MutationOp::qbit(2));
  EXPECT_NO_THROW(cfg.validate());
  auto bad = cfg;
  bad.lambda = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.max_generations = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.landscape.reset();
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.params = SearchSpaceParams::derive(4, 2);
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.op = MutationOp::qbit(6);
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(ParallelFor, VisitsEveryIndexAndRethrows) {
  std::vector<std::atomic<int>> hits(37);
  parallel_for(37, 4, [&](int i) { ++hits[i]; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(10, 3,
                            [](int i) {
                              if (i == 6) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

}  // namespace
}  // namespace enas
