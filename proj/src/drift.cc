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

#include "enas/drift.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "enas/counting.h"

namespace enas {

DistanceDistribution DistanceDistribution::point_mass(int n, int d) {
  if (d < 0 || d > n) throw std::invalid_argument("point mass outside [0, n]");
  DistanceDistribution out;
  out.mass.assign(n + 1, 0.0);
  out.mass[d] = 1.0;
  out.provenance = Provenance::kPointMass;
  return out;
}

DistanceDistribution DistanceDistribution::from_weights(
    std::vector<double> weights, Provenance provenance) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("distribution weights must be finite and "
                                  "non-negative");
    }
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("distribution has no mass");
  for (double& w : weights) w /= total;
  DistanceDistribution out;
  out.mass = std::move(weights);
  out.provenance = provenance;
  return out;
}

std::string to_string(DistanceDistribution::Provenance p) {
  switch (p) {
    case DistanceDistribution::Provenance::kUniform: return "uniform";
    case DistanceDistribution::Provenance::kGaussianFit: return "gaussian-fit";
    case DistanceDistribution::Provenance::kEmpirical: return "empirical";
    case DistanceDistribution::Provenance::kPointMass: return "point-mass";
  }
  return "?";
}

DistanceDistribution uniform_initial_distribution(const SearchSpaceParams& p,
                                                  int lambda,
                                                  InitialNormalization norm) {
  const PopulationCounts counts = population_counts(p, lambda);
  const BigCount denom = norm == InitialNormalization::kWholeSpace
                             ? counts.total
                             : counts.total - counts.subspace_sizes[0];
  DistanceDistribution out;
  out.provenance = DistanceDistribution::Provenance::kUniform;
  out.mass.assign(p.n + 1, 0.0);
  for (int d = 1; d <= p.n; ++d) {
    out.mass[d] = count_ratio(counts.subspace_sizes[d], denom);
  }
  if (norm == InitialNormalization::kWholeSpace) {
    out.mass[0] = count_ratio(counts.subspace_sizes[0], denom);
  }
  return out;
}

DistanceDistribution gaussian_fit_distribution(std::span<const int> samples,
                                               int n) {
  if (samples.size() < 2) {
    throw std::invalid_argument("a Gaussian fit needs at least two samples");
  }
  double mean = 0.0;
  for (int s : samples) mean += s;
  mean /= static_cast<double>(samples.size());
  double ss = 0.0;
  for (int s : samples) ss += (s - mean) * (s - mean);
  const double sigma = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("samples have zero variance; use the "
                                "empirical distribution instead");
  }
  std::vector<double> w(n + 1, 0.0);
  for (int d = 1; d <= n; ++d) {
    const double z = (d - mean) / sigma;
    w[d] = std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
  }
  auto out = DistanceDistribution::from_weights(
      std::move(w), DistanceDistribution::Provenance::kGaussianFit);
  out.mu = mean;
  out.sigma = sigma;
  return out;
}

ClassGammaWeights::ClassGammaWeights(const SearchSpaceParams& p, int lambda)
    : lambda_(lambda) {
  const PopulationCounts counts = population_counts(p, lambda);
  w_.assign(p.n + 1, std::vector<double>(lambda, 0.0));
  mean_gamma_.assign(p.n + 1, 0.0);
  for (int d = 1; d <= p.n; ++d) {
    const BigCount& class_total = counts.subspace_sizes[d];
    for (int g = 1; g <= lambda; ++g) {
      const double w = count_ratio(counts.class_sizes[d][g - 1], class_total);
      w_[d][g - 1] = w;
      mean_gamma_[d] += g * w;
    }
  }
}

double expected_initial_distance(const DistanceDistribution& pi0) {
  double e = 0.0;
  for (int d = 1; d <= pi0.max_distance(); ++d) e += d * pi0.mass[d];
  return e;
}

namespace {

double non_optimal_mass(const DistanceDistribution& pi_t) {
  const double rest = 1.0 - pi_t.optimal_mass();
  double spread = 0.0;
  for (int d = 1; d <= pi_t.max_distance(); ++d) spread += pi_t.mass[d];
  if (!(rest > 0.0) || !(spread > 0.0)) {
    throw std::invalid_argument("pi_t puts all of its mass on the optimal "
                                "class; the drift bound is undefined");
  }
  return rest;
}

void require_shapes(const SearchSpaceParams& p, int lambda,
                    const DistanceDistribution& pi_t,
                    const DistanceDistribution& pi0) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  if (pi_t.max_distance() != p.n || pi0.max_distance() != p.n) {
    throw std::invalid_argument("distributions must cover [0, n]");
  }
}

EhtBoundReport finish(const MutationOp& op, int lambda, double e_d0,
                      double drift) {
  EhtBoundReport r;
  r.op = op;
  r.lambda = lambda;
  r.expected_initial_distance = e_d0;
  r.average_drift_upper = drift;
  r.eht_lower_bound = drift > 0.0 ? e_d0 / drift
                                  : std::numeric_limits<double>::infinity();
  return r;
}

EhtBoundReport one_bit_bound(const MutationOp& op, int scale,
                             const SearchSpaceParams& p, int lambda,
                             const DistanceDistribution& pi_t,
                             const DistanceDistribution& pi0,
                             const ClassGammaWeights& weights) {
  require_shapes(p, lambda, pi_t, pi0);
  if (weights.lambda() != lambda || weights.max_distance() != p.n) {
    throw std::invalid_argument("class weights computed for another lambda "
                                "or space");
  }
  const double rest = non_optimal_mass(pi_t);
  double sum = 0.0;
  for (int d = 1; d <= p.n; ++d) {
    sum += d * pi_t.mass[d] * weights.expected_gamma(d);
  }
  return finish(op, lambda, expected_initial_distance(pi0),
                sum / (scale * rest));
}

}  // namespace

EhtBoundReport eht_lower_bound_m1(const SearchSpaceParams& p, int lambda,
                                  const DistanceDistribution& pi_t,
                                  const DistanceDistribution& pi0,
                                  const ClassGammaWeights& weights) {
  return one_bit_bound(MutationOp::one_bit_bit_fair(), p.n, p, lambda, pi_t,
                       pi0, weights);
}

EhtBoundReport eht_lower_bound_m2(const SearchSpaceParams& p, int lambda,
                                  const DistanceDistribution& pi_t,
                                  const DistanceDistribution& pi0,
                                  const ClassGammaWeights& weights) {
  return one_bit_bound(MutationOp::one_bit_offspring_fair(), p.Q, p, lambda,
                       pi_t, pi0, weights);
}

EhtBoundReport eht_lower_bound_multi(const SearchSpaceParams& p, int lambda,
                                     const MinTailTable& tails,
                                     const DistanceDistribution& pi_t,
                                     const DistanceDistribution& pi0) {
  require_shapes(p, lambda, pi_t, pi0);
  const double rest = non_optimal_mass(pi_t);
  const MutationOp& op = tails.op();
  double sum = 0.0;
  for (int d = 1; d <= p.n; ++d) {
    if (pi_t.mass[d] == 0.0) continue;
    double per_class = 0.0;
    if (op.kind() == MutationOp::Kind::kQBit) {
      per_class = op.q();
      for (int j = 0; j < op.q(); ++j) {
        per_class -= std::pow(tails(d, d - j), lambda);
      }
    } else {
      per_class = d;
      for (int t = 1; t <= d; ++t) per_class -= std::pow(tails(d, t), lambda);
    }
    sum += per_class * pi_t.mass[d];
  }
  return finish(op, lambda, expected_initial_distance(pi0), sum / rest);
}

EhtBoundReport eht_lower_bound_m3(const SearchSpaceParams& p, int lambda,
                                  int q, const DistanceDistribution& pi_t,
                                  const DistanceDistribution& pi0) {
  return eht_lower_bound_multi(p, lambda, MinTailTable(p, MutationOp::qbit(q)),
                               pi_t, pi0);
}

EhtBoundReport eht_lower_bound_m4(const SearchSpaceParams& p, int lambda,
                                  const DistanceDistribution& pi_t,
                                  const DistanceDistribution& pi0) {
  return eht_lower_bound_multi(p, lambda, MinTailTable(p, MutationOp::bitwise()),
                               pi_t, pi0);
}

TailTables::TailTables(const SearchSpaceParams& p,
                       std::span<const MutationOp> ops) {
  for (const auto& op : ops) {
    if (op.is_one_bit()) continue;
    bool seen = false;
    for (const auto& t : tables_) seen = seen || t.op() == op;
    if (!seen) tables_.emplace_back(p, op);
  }
}

const MinTailTable& TailTables::at(const MutationOp& op) const {
  for (const auto& t : tables_) {
    if (t.op() == op) return t;
  }
  throw std::out_of_range("no tail table for operator " + op.name());
}

std::vector<EhtBoundReport> case_study_bounds(
    const SearchSpaceParams& p, int lambda, const DistanceDistribution& pi_t,
    std::span<const MutationOp> ops, const TailTables& tails) {
  const auto pi0 = uniform_initial_distribution(
      p, lambda, InitialNormalization::kWholeSpace);
  std::vector<EhtBoundReport> out;
  std::optional<ClassGammaWeights> weights;
  for (const auto& op : ops) {
    switch (op.kind()) {
      case MutationOp::Kind::kOneBitBitFair:
        if (!weights) weights.emplace(p, lambda);
        out.push_back(eht_lower_bound_m1(p, lambda, pi_t, pi0, *weights));
        break;
      case MutationOp::Kind::kOneBitOffspringFair:
        if (!weights) weights.emplace(p, lambda);
        out.push_back(eht_lower_bound_m2(p, lambda, pi_t, pi0, *weights));
        break;
      default:
        out.push_back(
            eht_lower_bound_multi(p, lambda, tails.at(op), pi_t, pi0));
    }
  }
  return out;
}

}  // namespace enas
