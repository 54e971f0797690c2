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

// Exact sizes of the distance classes of the solution space and of the
// multiset population space.

#ifndef ENAS_COUNTING_H_
#define ENAS_COUNTING_H_

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "enas/genotype.h"

namespace enas {

using BigCount = boost::multiprecision::cpp_int;

// binom(n, k); zero when k < 0 or k > n, and for n < 0.
BigCount big_binomial(long long n, long long k);
BigCount big_binomial(const BigCount& n, long long k);

// Number of k-multisets drawn from `items` kinds: binom(items + k - 1, k),
// with the convention multiset(0, 0) = 1.
BigCount multiset_count(const BigCount& items, long long k);

// Solutions at Hamming distance d from a fixed optimum.
BigCount count_solutions_at_distance(const SearchSpaceParams& p, int d);

// C(0..n) in one pass.
std::vector<BigCount> distance_class_sizes(const SearchSpaceParams& p);

// 2^n1 (L+1)^n2.
BigCount solution_space_size(const SearchSpaceParams& p);

// Populations (lambda-multisets) whose minimum member distance is i and in
// which exactly gamma members attain it. Requires 1 <= gamma <= lambda and
// 1 <= i <= n.
BigCount count_population_class(const SearchSpaceParams& p, int lambda, int i,
                                 int gamma);

// Sum over gamma of count_population_class, i in [1, n]. For i = 0 returns
// the size of the optimal subspace, |chi| minus the rest.
BigCount count_population_subspace(const SearchSpaceParams& p, int lambda,
                                   int i);

// binom(lambda + |S| - 1, lambda).
BigCount population_space_size(const SearchSpaceParams& p, int lambda);

// All population-class counts for one lambda, computed with shared
// tail sums. class_sizes[d][gamma - 1] for d in [1, n]; row 0 is empty.
struct PopulationCounts {
  int lambda = 0;
  std::vector<BigCount> solutions;                  // C(d), d in [0, n]
  std::vector<std::vector<BigCount>> class_sizes;   // |chi_d^gamma|
  std::vector<BigCount> subspace_sizes;             // |chi_d|, d in [0, n]
  BigCount total;                                   // |chi|
};

PopulationCounts population_counts(const SearchSpaceParams& p, int lambda);

// Ratio of two big counts as a double, accurate to well below 1e-12
// relative.
double count_ratio(const BigCount& num, const BigCount& den);

}  // namespace enas

#endif  // ENAS_COUNTING_H_
