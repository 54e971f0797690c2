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

// Brute-force reference computations shared by the unit tests and the
// acceptance suite. Everything here is written from the definitions and
// uses none of the closed forms under test.

#ifndef ENAS_TESTS_ORACLES_H_
#define ENAS_TESTS_ORACLES_H_

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "enas/genotype.h"
#include "enas/landscape.h"
#include "enas/transition.h"

namespace enas::testing {

// Every genotype of the space, decoded from a mixed-radix index.
inline std::vector<Genotype> all_genotypes(const SearchSpaceParams& p) {
  std::int64_t total = std::int64_t{1} << p.n1;
  for (int i = 0; i < p.n2; ++i) total *= p.L + 1;
  std::vector<Genotype> out;
  out.reserve(total);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t r = idx;
    std::vector<std::uint8_t> edges(p.n1), ops(p.n2);
    for (int i = 0; i < p.n1; ++i) {
      edges[i] = r & 1;
      r >>= 1;
    }
    for (int i = 0; i < p.n2; ++i) {
      ops[i] = static_cast<std::uint8_t>(r % (p.L + 1));
      r /= p.L + 1;
    }
    out.emplace_back(std::move(edges), std::move(ops));
  }
  return out;
}

// Number of genotypes at each distance from `opt`.
inline std::vector<std::int64_t> brute_class_sizes(const SearchSpaceParams& p,
                                                   const Genotype& opt) {
  std::vector<std::int64_t> c(p.n + 1, 0);
  for (const auto& g : all_genotypes(p)) ++c[hamming(g, opt)];
  return c;
}

// counts[d][gamma] over all lambda-multisets of genotypes, where d is the
// minimum member distance to the all-zero optimum and gamma the number of
// members at d. Multisets are walked as non-decreasing index tuples.
inline std::vector<std::vector<std::int64_t>> brute_population_classes(
    const SearchSpaceParams& p, int lambda) {
  const auto space = all_genotypes(p);
  const Genotype opt = Genotype::zeros(p);
  std::vector<int> dist(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) dist[i] = hamming(space[i], opt);
  std::vector<std::vector<std::int64_t>> counts(
      p.n + 1, std::vector<std::int64_t>(lambda + 1, 0));
  std::vector<std::size_t> idx(lambda, 0);
  const std::size_t m = space.size();
  while (true) {
    int best = p.n + 1, gamma = 0;
    for (int k = 0; k < lambda; ++k) {
      const int d = dist[idx[k]];
      if (d < best) {
        best = d;
        gamma = 1;
      } else if (d == best) {
        ++gamma;
      }
    }
    ++counts[best][gamma];
    int k = lambda - 1;
    while (k >= 0 && idx[k] == m - 1) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < lambda; ++j) idx[j] = idx[k];
  }
  return counts;
}

// One-slot neighbours of x, each with its Mutation#1 probability.
inline std::vector<std::pair<Genotype, double>> bit_fair_neighbours(
    const Genotype& x, const SearchSpaceParams& p) {
  std::vector<std::pair<Genotype, double>> out;
  for (int s = 0; s < p.n; ++s) {
    if (x.is_edge_slot(s)) {
      Genotype y = x;
      y[s] ^= 1;
      out.emplace_back(y, 1.0 / p.n);
      continue;
    }
    for (int v = 0; v <= p.L; ++v) {
      if (v == x[s]) continue;
      Genotype y = x;
      y[s] = static_cast<std::uint8_t>(v);
      out.emplace_back(y, 1.0 / (p.n * p.L));
    }
  }
  return out;
}

// Exact expected hitting time of the lambda = 1 Mutation#1 search on
// `land`, started from a uniform genotype. The single-individual chain
// moves to a fitter offspring, to an equally fit one with probability 1/2,
// and otherwise stays. Solves (I - Q) h = 1 over the transient states.
inline double exact_singleton_eht(const SearchSpaceParams& p,
                                  const FitnessLandscape& land) {
  const auto space = all_genotypes(p);
  const Genotype& opt = land.optimum();
  std::map<std::vector<std::uint8_t>, int> index;
  std::vector<int> transient;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space[i] == opt) continue;
    index[std::vector<std::uint8_t>(space[i].slots().begin(),
                                    space[i].slots().end())] =
        static_cast<int>(transient.size());
    transient.push_back(static_cast<int>(i));
  }
  const int t = static_cast<int>(transient.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(t, t);
  for (int r = 0; r < t; ++r) {
    const Genotype& x = space[transient[r]];
    const double fx = land.evaluate(x);
    for (const auto& [y, prob] : bit_fair_neighbours(x, p)) {
      const double fy = land.evaluate(y);
      double move = 0.0;
      if (fy > fx) move = 1.0;
      else if (fy == fx) move = 0.5;
      const double p_move = prob * move;
      a(r, r) -= prob - p_move;  // stays at x
      if (y == opt) continue;
      const int c = index.at(std::vector<std::uint8_t>(y.slots().begin(),
                                                       y.slots().end()));
      a(r, c) -= p_move;
    }
  }
  const Eigen::VectorXd h = a.fullPivLu().solve(Eigen::VectorXd::Ones(t));
  return h.sum() / static_cast<double>(space.size());
}

// Binomial standard deviation of a frequency estimate.
inline double binomial_sigma(double p, std::int64_t samples) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

}  // namespace enas::testing

#endif  // ENAS_TESTS_ORACLES_H_
