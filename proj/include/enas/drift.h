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

// Average-drift lower bounds on the expected hitting time.
//
// Every bound has the form E[d(xi_0)] / c1 where c1 bounds the average
// one-generation decrease of the population distance from above. The drift
// bound depends on the operator:
//
//   m1:  sum_d d sum_g g pi_t(d) w(d, g) / (n (1 - pi_t(0)))
//   m2:  the same with n replaced by Q = n1 + L n2
//   m3:  sum_d (q - sum_{j<q} T(d, d - j)^lambda) pi_t(d) / (1 - pi_t(0))
//   m4:  sum_d (d - sum_{D=1..d} T(d, D)^lambda) pi_t(d) / (1 - pi_t(0))
//
// where w(d, g) = |chi_d^g| / |chi_d| and T(d, t) is the smallest
// probability, over parents at distance >= d, that the offspring lands at
// distance >= t (see MinTailTable).

#ifndef ENAS_DRIFT_H_
#define ENAS_DRIFT_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "enas/genotype.h"
#include "enas/operators.h"
#include "enas/transition.h"

namespace enas {

// Probability mass per population-distance class d in [0, n].
struct DistanceDistribution {
  enum class Provenance { kUniform, kGaussianFit, kEmpirical, kPointMass };

  std::vector<double> mass;
  Provenance provenance = Provenance::kEmpirical;
  double mu = 0.0;     // GaussianFit only
  double sigma = 0.0;  // GaussianFit only

  int max_distance() const { return static_cast<int>(mass.size()) - 1; }
  double optimal_mass() const { return mass.empty() ? 0.0 : mass[0]; }

  static DistanceDistribution point_mass(int n, int d);
  // Normalizes non-negative weights over [0, n]; throws if all are zero.
  static DistanceDistribution from_weights(std::vector<double> weights,
                                           Provenance provenance);
};

std::string to_string(DistanceDistribution::Provenance p);

enum class InitialNormalization {
  // |chi_d| / (|chi| - |chi*|); no mass on the optimal class.
  kConditionedOnNonOptimal,
  // |chi_d| / |chi|; the optimal class keeps its share.
  kWholeSpace,
};

DistanceDistribution uniform_initial_distribution(
    const SearchSpaceParams& p, int lambda,
    InitialNormalization norm = InitialNormalization::kConditionedOnNonOptimal);

// Moment fit (mean, sample standard deviation) evaluated at d in [1, n] and
// renormalized. Throws std::invalid_argument for fewer than two samples or
// zero variance.
DistanceDistribution gaussian_fit_distribution(std::span<const int> samples,
                                               int n);

// Share of populations in class d with exactly gamma members at distance d,
// under uniformity within the class.
class ClassGammaWeights {
 public:
  ClassGammaWeights(const SearchSpaceParams& p, int lambda);

  int lambda() const { return lambda_; }
  int max_distance() const { return static_cast<int>(w_.size()) - 1; }
  // d in [1, n], gamma in [1, lambda]
  double weight(int d, int gamma) const { return w_[d][gamma - 1]; }
  // sum_g g w(d, g)
  double expected_gamma(int d) const { return mean_gamma_[d]; }

 private:
  int lambda_;
  std::vector<std::vector<double>> w_;
  std::vector<double> mean_gamma_;
};

// sum_{d >= 1} d pi0(d)
double expected_initial_distance(const DistanceDistribution& pi0);

struct EhtBoundReport {
  MutationOp op = MutationOp::one_bit_bit_fair();
  int lambda = 0;
  double expected_initial_distance = 0.0;
  double average_drift_upper = 0.0;
  double eht_lower_bound = 0.0;  // +inf when the drift bound is zero
};

EhtBoundReport eht_lower_bound_m1(const SearchSpaceParams& p, int lambda,
                                  const DistanceDistribution& pi_t,
                                  const DistanceDistribution& pi0,
                                  const ClassGammaWeights& weights);
EhtBoundReport eht_lower_bound_m2(const SearchSpaceParams& p, int lambda,
                                  const DistanceDistribution& pi_t,
                                  const DistanceDistribution& pi0,
                                  const ClassGammaWeights& weights);
EhtBoundReport eht_lower_bound_m3(const SearchSpaceParams& p, int lambda,
                                  int q, const DistanceDistribution& pi_t,
                                  const DistanceDistribution& pi0);
EhtBoundReport eht_lower_bound_m4(const SearchSpaceParams& p, int lambda,
                                  const DistanceDistribution& pi_t,
                                  const DistanceDistribution& pi0);

// Same as the m3/m4 forms but reuse a precomputed tail table.
EhtBoundReport eht_lower_bound_multi(const SearchSpaceParams& p, int lambda,
                                     const MinTailTable& tails,
                                     const DistanceDistribution& pi_t,
                                     const DistanceDistribution& pi0);

// Tail tables for a set of multi-slot operators, built once per space.
class TailTables {
 public:
  TailTables(const SearchSpaceParams& p, std::span<const MutationOp> ops);
  const MinTailTable& at(const MutationOp& op) const;

 private:
  std::vector<MinTailTable> tables_;
};

// All requested operator bounds at one lambda with pi0 = |chi_d| / |chi|.
// `tails` must cover every multi-slot operator in `ops`.
std::vector<EhtBoundReport> case_study_bounds(
    const SearchSpaceParams& p, int lambda, const DistanceDistribution& pi_t,
    std::span<const MutationOp> ops, const TailTables& tails);

}  // namespace enas

#endif  // ENAS_DRIFT_H_
