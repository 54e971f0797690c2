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

#include "enas/counting.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace enas {

namespace mp = boost::multiprecision;

BigCount big_binomial(const BigCount& n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  // Use the smaller of k and n - k.
  const BigCount rest = n - k;
  if (rest < k) k = rest.convert_to<long long>();
  BigCount result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is binom(n - k + i, i) here
  }
  return result;
}

BigCount big_binomial(long long n, long long k) {
  return big_binomial(BigCount(n), k);
}

BigCount multiset_count(const BigCount& items, long long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (items <= 0) return 0;
  return big_binomial(items + k - 1, k);
}

namespace {

void require_distance(const SearchSpaceParams& p, int d) {
  if (d < 0 || d > p.n) {
    throw std::invalid_argument("distance " + std::to_string(d) +
                                " outside [0, " + std::to_string(p.n) + "]");
  }
}

void require_lambda(int lambda) {
  if (lambda < 1) {
    throw std::invalid_argument("lambda must be >= 1, got " +
                                std::to_string(lambda));
  }
}

}  // namespace

BigCount count_solutions_at_distance(const SearchSpaceParams& p, int d) {
  require_distance(p, d);
  BigCount total = 0;
  const int lo = std::max(0, d - p.n2);
  const int hi = std::min(d, p.n1);
  for (int d1 = lo; d1 <= hi; ++d1) {
    const int d2 = d - d1;
    total += mp::pow(BigCount(p.L), static_cast<unsigned>(d2)) *
             big_binomial(p.n1, d1) * big_binomial(p.n2, d2);
  }
  return total;
}

std::vector<BigCount> distance_class_sizes(const SearchSpaceParams& p) {
  std::vector<BigCount> out(p.n + 1);
  for (int d = 0; d <= p.n; ++d) out[d] = count_solutions_at_distance(p, d);
  return out;
}

BigCount solution_space_size(const SearchSpaceParams& p) {
  return mp::pow(BigCount(2), static_cast<unsigned>(p.n1)) *
         mp::pow(BigCount(p.L + 1), static_cast<unsigned>(p.n2));
}

BigCount population_space_size(const SearchSpaceParams& p, int lambda) {
  require_lambda(lambda);
  return multiset_count(solution_space_size(p), lambda);
}

namespace {

// Members strictly farther than i: sum_{j > i} C(j).
BigCount farther_than(const std::vector<BigCount>& sizes, int i) {
  BigCount t = 0;
  for (int j = i + 1; j < static_cast<int>(sizes.size()); ++j) t += sizes[j];
  return t;
}

BigCount class_size(const BigCount& at_i, const BigCount& beyond, int lambda,
                    int gamma) {
  return multiset_count(at_i, gamma) * multiset_count(beyond, lambda - gamma);
}

}  // namespace

BigCount count_population_class(const SearchSpaceParams& p, int lambda, int i,
                                int gamma) {
  require_lambda(lambda);
  if (i < 1 || i > p.n) {
    throw std::invalid_argument("class index i must be in [1, n], got " +
                                std::to_string(i));
  }
  if (gamma < 1 || gamma > lambda) {
    throw std::invalid_argument("gamma must be in [1, lambda], got " +
                                std::to_string(gamma));
  }
  const auto sizes = distance_class_sizes(p);
  return class_size(sizes[i], farther_than(sizes, i), lambda, gamma);
}

PopulationCounts population_counts(const SearchSpaceParams& p, int lambda) {
  require_lambda(lambda);
  PopulationCounts out;
  out.lambda = lambda;
  out.solutions = distance_class_sizes(p);
  out.total = population_space_size(p, lambda);
  out.class_sizes.assign(p.n + 1, {});
  out.subspace_sizes.assign(p.n + 1, 0);

  BigCount beyond = 0;  // sum_{j > d} C(j), built from the far end
  BigCount non_optimal = 0;
  for (int d = p.n; d >= 1; --d) {
    const BigCount& at = out.solutions[d];
    // multiset(at, gamma) and multiset(beyond, lambda - gamma) by recurrence
    // so that each row costs O(lambda) big multiplications.
    std::vector<BigCount> near(lambda + 1);
    std::vector<BigCount> far(lambda + 1);
    near[0] = 1;
    far[0] = 1;
    for (int k = 1; k <= lambda; ++k) {
      near[k] = near[k - 1] * (at + k - 1) / k;
      far[k] = far[k - 1] * (beyond + k - 1) / k;
    }
    auto& row = out.class_sizes[d];
    row.resize(lambda);
    BigCount sum = 0;
    for (int gamma = 1; gamma <= lambda; ++gamma) {
      row[gamma - 1] = near[gamma] * far[lambda - gamma];
      sum += row[gamma - 1];
    }
    out.subspace_sizes[d] = sum;
    non_optimal += sum;
    beyond += at;
  }
  out.subspace_sizes[0] = out.total - non_optimal;
  return out;
}

BigCount count_population_subspace(const SearchSpaceParams& p, int lambda,
                                   int i) {
  require_distance(p, i);
  return population_counts(p, lambda).subspace_sizes[i];
}

double count_ratio(const BigCount& num, const BigCount& den) {
  if (den == 0) throw std::domain_error("count_ratio: zero denominator");
  using Float = mp::cpp_bin_float_50;
  return static_cast<double>(Float(num) / Float(den));
}

}  // namespace enas
