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
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

namespace enas {

void RunConfig::validate() const {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  if (max_generations < 1) {
    throw std::invalid_argument("max generations must be >= 1");
  }
  if (!landscape) throw std::invalid_argument("run has no fitness landscape");
  if (!(landscape->params() == params)) {
    throw std::invalid_argument("landscape belongs to another search space");
  }
  op.validate(params);
}

namespace {

bool can_be_absorbed(const RunConfig& cfg) {
  return cfg.op.kind() == MutationOp::Kind::kQBit && cfg.op.q() >= 2 &&
         cfg.landscape->ordered_by_distance();
}

}  // namespace

HittingTimeRecord run_enas(const RunConfig& cfg) {
  cfg.validate();
  const SearchSpaceParams& p = cfg.params;
  const FitnessLandscape& land = *cfg.landscape;
  const Genotype& opt = land.optimum();
  const bool absorbable = cfg.stop_when_absorbed && can_be_absorbed(cfg);
  Rng rng = make_rng(cfg.seed);

  Population pop = init_population(p, cfg.lambda, rng);
  std::vector<double> fit(pop.size());
  std::vector<int> dist(pop.size());
  HittingTimeRecord rec;

  auto observe = [&] {
    for (std::size_t i = 0; i < pop.size(); ++i) dist[i] = hamming(pop[i], opt);
    rec.distance_trajectory.push_back(*std::min_element(dist.begin(), dist.end()));
    rec.best_fitness.push_back(*std::max_element(fit.begin(), fit.end()));
    return rec.distance_trajectory.back() == 0;
  };

  for (std::size_t i = 0; i < pop.size(); ++i) fit[i] = land.evaluate(pop[i]);
  if (observe()) {
    rec.generations = 0;
    return rec;
  }

  Population offspring(pop.size());
  std::vector<double> offspring_fit(pop.size());
  for (int t = 1; t <= cfg.max_generations; ++t) {
    for (std::size_t i = 0; i < pop.size(); ++i) {
      offspring[i] = pop[i];
      mutate_in_place(offspring[i], cfg.op, p, rng);
      offspring_fit[i] = land.evaluate(offspring[i]);
    }
    Survivors next = truncation_select(pop, fit, offspring, offspring_fit, rng);
    pop = std::move(next.members);
    fit = std::move(next.fitness);
    if (observe()) {
      rec.generations = t;
      return rec;
    }
    if (absorbable &&
        *std::max_element(dist.begin(), dist.end()) < cfg.op.q()) {
      rec.absorbed = true;
      return rec;
    }
  }
  return rec;
}

HittingTimeStats summarize(std::span<const HittingTimeRecord> records) {
  HittingTimeStats s;
  s.trials = static_cast<int>(records.size());
  std::vector<int> hits;
  for (const auto& r : records) {
    if (r.censored()) {
      ++s.censored_count;
      if (r.absorbed) ++s.absorbed_count;
    } else {
      hits.push_back(*r.generations);
      ++s.histogram[*r.generations];
    }
  }
  if (hits.empty()) {
    s.mean = s.std = s.median = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  const double k = static_cast<double>(hits.size());
  s.mean = std::accumulate(hits.begin(), hits.end(), 0.0) / k;
  double ss = 0.0;
  for (int h : hits) ss += (h - s.mean) * (h - s.mean);
  s.std = hits.size() > 1 ? std::sqrt(ss / (k - 1.0)) : 0.0;
  std::sort(hits.begin(), hits.end());
  const std::size_t mid = hits.size() / 2;
  s.median = hits.size() % 2 ? hits[mid] : 0.5 * (hits[mid - 1] + hits[mid]);
  return s;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += jobs) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<HittingTimeRecord> run_trial_records(const RunConfig& cfg,
                                                 int trials, int jobs) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  cfg.validate();
  std::vector<HittingTimeRecord> out(trials);
  parallel_for(trials, jobs, [&](int i) {
    RunConfig local = cfg;
    local.seed = derive_seed(cfg.seed, "trial", static_cast<std::uint64_t>(i));
    out[i] = run_enas(local);
  });
  return out;
}

HittingTimeStats run_trials(const RunConfig& cfg, int trials, int jobs) {
  const auto records = run_trial_records(cfg, trials, jobs);
  return summarize(records);
}

DistanceSample sample_distance_distribution(const RunConfig& cfg, int trials,
                                            int jobs) {
  const auto records = run_trial_records(cfg, trials, jobs);
  DistanceSample out;
  std::vector<double> counts(cfg.params.n + 1, 0.0);
  for (const auto& r : records) {
    // Every recorded generation is pre-hitting except the last of a hit.
    const std::size_t end = r.distance_trajectory.size() - (r.censored() ? 0 : 1);
    for (std::size_t t = 0; t < end; ++t) {
      const int d = r.distance_trajectory[t];
      out.samples.push_back(d);
      counts[d] += 1.0;
    }
  }
  if (out.samples.empty()) {
    throw EmptySampleError("every trial hit the optimum at generation 0; no "
                           "pre-hitting distances to sample");
  }
  out.distribution = DistanceDistribution::from_weights(
      std::move(counts), DistanceDistribution::Provenance::kEmpirical);
  return out;
}

StepDistributionF mc_transition_oracle(const Genotype& x, const MutationOp& op,
                                       const Genotype& opt,
                                       const SearchSpaceParams& p,
                                       std::int64_t samples, RandomSeed seed) {
  if (samples < 10000) {
    throw std::invalid_argument("the Monte-Carlo oracle needs >= 1e4 samples");
  }
  x.validate(p);
  opt.validate(p);
  op.validate(p);
  Rng rng = make_rng(seed);
  std::vector<std::int64_t> counts(p.n + 1, 0);
  Genotype y;
  for (std::int64_t s = 0; s < samples; ++s) {
    y = x;
    mutate_in_place(y, op, p, rng);
    ++counts[hamming(y, opt)];
  }
  StepDistributionF out;
  out.mass.resize(p.n + 1);
  for (int d = 0; d <= p.n; ++d) {
    out.mass[d] = static_cast<double>(counts[d]) / static_cast<double>(samples);
  }
  return out;
}

}  // namespace enas
