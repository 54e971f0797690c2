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

// Closed-form distributions of the offspring's distance to the optimum,
// given the parent's distance profile (d1, d2), for each mutation operator.
//
// Every function is a template over the scalar type. `double` is the working
// mode; `Rational` gives exact values and is practical for n <= 12.

#ifndef ENAS_TRANSITION_H_
#define ENAS_TRANSITION_H_

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "enas/genotype.h"
#include "enas/operators.h"

namespace enas {

using Rational = boost::multiprecision::cpp_rational;

// Probability mass over offspring distance d_y in [0, n].
template <typename T>
struct StepDistribution {
  std::vector<T> mass;

  int max_distance() const { return static_cast<int>(mass.size()) - 1; }
  T at(int d) const {
    return d >= 0 && d < static_cast<int>(mass.size()) ? mass[d] : T(0);
  }
  T total() const;
  // sum of mass over d_y >= threshold
  T tail(int threshold) const;

  friend bool operator==(const StepDistribution&,
                         const StepDistribution&) = default;
};

using StepDistributionF = StepDistribution<double>;
using StepDistributionQ = StepDistribution<Rational>;

// Shape of the space as seen by the formulas. Unlike SearchSpaceParams this
// admits n2 = 0, i.e. a plain binary string.
struct SlotLayout {
  int n1 = 0;
  int n2 = 0;
  int L = 1;
  int n() const { return n1 + n2; }
  static SlotLayout of(const SearchSpaceParams& p) { return {p.n1, p.n2, p.L}; }
};

// Binary string of length n at distance d_x with exactly q flipped bits:
// mass at d_x - q + 2i is binom(d_x, q - i) binom(n - d_x, i) / binom(n, q).
template <typename T>
StepDistribution<T> binary_qbit_step(int n, int d_x, int q);

// One slot uniform on [1, n] (Mutation#1).
template <typename T>
StepDistribution<T> bit_fair_one_bit_step(const SearchSpaceParams& p,
                                          DistanceProfile prof);

// Each of the Q = n1 + L n2 one-slot offspring equally likely (Mutation#2).
template <typename T>
StepDistribution<T> offspring_fair_one_bit_step(const SearchSpaceParams& p,
                                                DistanceProfile prof);

// Uniform q-subset of slots, each changed (Mutation#3).
template <typename T>
StepDistribution<T> qbit_step(const SlotLayout& layout, DistanceProfile prof,
                              int q);
template <typename T>
StepDistribution<T> qbit_step(const SearchSpaceParams& p,
                              DistanceProfile prof, int q) {
  return qbit_step<T>(SlotLayout::of(p), prof, q);
}

// Each slot changed independently with probability 1/n (Mutation#4).
template <typename T>
StepDistribution<T> bitwise_step(const SearchSpaceParams& p,
                                 DistanceProfile prof);

template <typename T>
StepDistribution<T> step_distribution(const SearchSpaceParams& p,
                                      DistanceProfile prof,
                                      const MutationOp& op);

// min over d_x in [d, n] and over every split (d1, d2) of d_x of the
// probability that the offspring lands at distance >= threshold. Only the
// multi-slot operators (QBit, Bitwise) are accepted.
double min_tail_probability(const SearchSpaceParams& p, const MutationOp& op,
                            int d, int threshold);

// The same quantity for every (d, threshold), computed once.
class MinTailTable {
 public:
  MinTailTable(const SearchSpaceParams& p, const MutationOp& op);

  // d in [1, n]; thresholds <= 0 give 1, thresholds > n give 0.
  double operator()(int d, int threshold) const;

  const MutationOp& op() const { return op_; }

 private:
  int n_;
  MutationOp op_;
  std::vector<std::vector<double>> min_tail_;  // [d][threshold]
};

// Enumerates every outcome of `op` applied to `x` and weighs it exactly.
// Throws std::length_error when the outcome count exceeds `max_outcomes`
// (one-bit operators are always accepted).
StepDistributionQ exact_enumeration_oracle(const Genotype& x,
                                           const MutationOp& op,
                                           const Genotype& opt,
                                           const SearchSpaceParams& p,
                                           double max_outcomes = 1e7);

StepDistributionF to_double(const StepDistributionQ& dist);

}  // namespace enas

#endif  // ENAS_TRANSITION_H_
