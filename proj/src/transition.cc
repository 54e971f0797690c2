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

#include "enas/transition.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "enas/counting.h"

namespace enas {

namespace {

template <typename T>
T binom(int n, int k);

template <>
double binom<double>(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  // Exact while the result stays below 2^53, which covers every n used in
  // practice (n <= 56).
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<double>(std::round(r));
}

template <>
Rational binom<Rational>(int n, int k) {
  return Rational(big_binomial(n, k));
}

template <typename T>
T fraction(long long num, long long den) {
  return T(num) / T(den);
}

template <typename T>
T ipow(T base, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void require_profile(const SlotLayout& s, DistanceProfile prof) {
  if (prof.d1 < 0 || prof.d2 < 0 || prof.d1 > s.n1 || prof.d2 > s.n2 ||
      prof.d != prof.d1 + prof.d2) {
    throw std::invalid_argument(
        "infeasible distance profile (d1=" + std::to_string(prof.d1) +
        ", d2=" + std::to_string(prof.d2) + ") for n1=" +
        std::to_string(s.n1) + ", n2=" + std::to_string(s.n2));
  }
}

template <typename T>
void add_mass(StepDistribution<T>& dist, int d, const std::type_identity_t<T>& m) {
  if (m == T(0)) return;
  if (d < 0 || d > dist.max_distance()) {
    throw std::logic_error("transition mass outside [0, n]");
  }
  dist.mass[d] += m;
}

template <typename T>
StepDistribution<T> empty_distribution(int n) {
  return StepDistribution<T>{std::vector<T>(n + 1, T(0))};
}

}  // namespace

template <typename T>
T StepDistribution<T>::total() const {
  T s(0);
  for (const T& m : mass) s += m;
  return s;
}

template <typename T>
T StepDistribution<T>::tail(int threshold) const {
  T s(0);
  for (int d = std::max(threshold, 0); d <= max_distance(); ++d) s += mass[d];
  return s;
}

template <typename T>
StepDistribution<T> binary_qbit_step(int n, int d_x, int q) {
  if (n < 1 || d_x < 0 || d_x > n || q < 1 || q > n) {
    throw std::invalid_argument("binary q-bit step needs 0 <= d_x <= n and "
                                "1 <= q <= n");
  }
  auto dist = empty_distribution<T>(n);
  const T total = binom<T>(n, q);
  for (int i = 0; i <= q; ++i) {
    const T ways = binom<T>(d_x, q - i) * binom<T>(n - d_x, i);
    add_mass(dist, d_x - q + 2 * i, ways / total);
  }
  return dist;
}

template <typename T>
StepDistribution<T> bit_fair_one_bit_step(const SearchSpaceParams& p,
                                          DistanceProfile prof) {
  require_profile(SlotLayout::of(p), prof);
  auto dist = empty_distribution<T>(p.n);
  const long long nl = static_cast<long long>(p.n) * p.L;
  add_mass(dist, prof.d - 1,
           fraction<T>(static_cast<long long>(prof.d1) * p.L + prof.d2, nl));
  add_mass(dist, prof.d,
           fraction<T>(static_cast<long long>(prof.d2) * (p.L - 1), nl));
  add_mass(dist, prof.d + 1, T(1) - fraction<T>(prof.d, p.n));
  return dist;
}

template <typename T>
StepDistribution<T> offspring_fair_one_bit_step(const SearchSpaceParams& p,
                                                DistanceProfile prof) {
  require_profile(SlotLayout::of(p), prof);
  auto dist = empty_distribution<T>(p.n);
  add_mass(dist, prof.d - 1, fraction<T>(prof.d, p.Q));
  add_mass(dist, prof.d,
           fraction<T>(static_cast<long long>(prof.d2) * (p.L - 1), p.Q));
  add_mass(dist, prof.d + 1,
           T(1) - fraction<T>(prof.d1 + static_cast<long long>(p.L) * prof.d2,
                              p.Q));
  return dist;
}

template <typename T>
StepDistribution<T> qbit_step(const SlotLayout& s, DistanceProfile prof,
                              int q) {
  require_profile(s, prof);
  const int n = s.n();
  if (q < 1 || q > n) {
    throw std::invalid_argument("q must be in [1, n], got " +
                                std::to_string(q));
  }
  auto dist = empty_distribution<T>(n);
  const T subsets = binom<T>(n, q);
  const T fix = fraction<T>(1, s.L);           // mismatched op becomes right
  const T stay = T(1) - fix;                   // ...or moves to another wrong
  const int d1 = prof.d1;
  const int d2 = prof.d2;
  // z op slots and q - z edge slots are selected; a of the edge slots and b
  // of the op slots are mismatched; c of those b get fixed.
  for (int z = 0; z <= std::min(q, s.n2); ++z) {
    for (int a = 0; a <= std::min(q - z, d1); ++a) {
      for (int b = 0; b <= std::min(z, d2); ++b) {
        const T ways = binom<T>(d1, a) * binom<T>(s.n1 - d1, q - z - a) *
                       binom<T>(d2, b) * binom<T>(s.n2 - d2, z - b);
        if (ways == T(0)) continue;
        const T base = ways / subsets;
        for (int c = 0; c <= b; ++c) {
          const T pc = binom<T>(b, c) * ipow(fix, c) * ipow(stay, b - c);
          add_mass(dist, prof.d + q - (2 * a + b + c), base * pc);
        }
      }
    }
  }
  return dist;
}

template <typename T>
StepDistribution<T> bitwise_step(const SearchSpaceParams& p,
                                 DistanceProfile prof) {
  const SlotLayout s = SlotLayout::of(p);
  require_profile(s, prof);
  auto dist = empty_distribution<T>(p.n);
  const T rate = fraction<T>(1, p.n);
  const T keep = T(1) - rate;
  // q = 0 leaves the parent unchanged.
  add_mass(dist, prof.d, ipow(keep, p.n));
  for (int q = 1; q <= p.n; ++q) {
    const T weight = binom<T>(p.n, q) * ipow(rate, q) * ipow(keep, p.n - q);
    const auto given_q = qbit_step<T>(s, prof, q);
    for (int d = 0; d <= p.n; ++d) add_mass(dist, d, weight * given_q.mass[d]);
  }
  return dist;
}

template <typename T>
StepDistribution<T> step_distribution(const SearchSpaceParams& p,
                                      DistanceProfile prof,
                                      const MutationOp& op) {
  switch (op.kind()) {
    case MutationOp::Kind::kOneBitBitFair:
      return bit_fair_one_bit_step<T>(p, prof);
    case MutationOp::Kind::kOneBitOffspringFair:
      return offspring_fair_one_bit_step<T>(p, prof);
    case MutationOp::Kind::kQBit:
      return qbit_step<T>(p, prof, op.q());
    case MutationOp::Kind::kBitwise:
      return bitwise_step<T>(p, prof);
  }
  throw std::logic_error("unknown mutation kind");
}

#define ENAS_INSTANTIATE_TRANSITION(T)                                         \
  template struct StepDistribution<T>;                                         \
  template StepDistribution<T> binary_qbit_step<T>(int, int, int);             \
  template StepDistribution<T> bit_fair_one_bit_step<T>(                       \
      const SearchSpaceParams&, DistanceProfile);                              \
  template StepDistribution<T> offspring_fair_one_bit_step<T>(                 \
      const SearchSpaceParams&, DistanceProfile);                              \
  template StepDistribution<T> qbit_step<T>(const SlotLayout&,                 \
                                            DistanceProfile, int);             \
  template StepDistribution<T> bitwise_step<T>(const SearchSpaceParams&,       \
                                               DistanceProfile);               \
  template StepDistribution<T> step_distribution<T>(                           \
      const SearchSpaceParams&, DistanceProfile, const MutationOp&);

ENAS_INSTANTIATE_TRANSITION(double)
ENAS_INSTANTIATE_TRANSITION(Rational)

#undef ENAS_INSTANTIATE_TRANSITION

MinTailTable::MinTailTable(const SearchSpaceParams& p, const MutationOp& op)
    : n_(p.n), op_(op) {
  if (op.is_one_bit()) {
    throw std::invalid_argument("minimum tail bounds apply to q-bit and "
                                "bitwise mutation only");
  }
  op.validate(p);
  // worst[d_x][t]: min over splits of d_x of P(d_y >= t).
  std::vector<std::vector<double>> worst(
      p.n + 1, std::vector<double>(p.n + 2, 1.0));
  for (int d1 = 0; d1 <= p.n1; ++d1) {
    for (int d2 = 0; d2 <= p.n2; ++d2) {
      const auto dist =
          step_distribution<double>(p, DistanceProfile::of(d1, d2), op);
      double tail = 0.0;
      auto& row = worst[d1 + d2];
      row[p.n + 1] = 0.0;
      for (int t = p.n; t >= 0; --t) {
        tail += dist.mass[t];
        row[t] = std::min(row[t], std::min(tail, 1.0));
      }
    }
  }
  min_tail_.assign(p.n + 1, std::vector<double>(p.n + 2, 1.0));
  std::vector<double> running(p.n + 2, 1.0);
  for (int d = p.n; d >= 1; --d) {
    for (int t = 0; t <= p.n + 1; ++t) {
      running[t] = std::min(running[t], worst[d][t]);
    }
    min_tail_[d] = running;
  }
}

double MinTailTable::operator()(int d, int threshold) const {
  if (d < 1 || d > n_) {
    throw std::invalid_argument("distance must be in [1, n], got " +
                                std::to_string(d));
  }
  if (threshold <= 0) return 1.0;
  if (threshold > n_) return 0.0;
  return min_tail_[d][threshold];
}

double min_tail_probability(const SearchSpaceParams& p, const MutationOp& op,
                            int d, int threshold) {
  if (threshold < 0 || threshold > p.n) {
    throw std::invalid_argument("threshold must be in [0, n], got " +
                                std::to_string(threshold));
  }
  return MinTailTable(p, op)(d, threshold);
}

namespace {

// Visits every q-subset of [0, n) in lexicographic order.
void for_each_subset(int n, int q,
                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(q);
  for (int i = 0; i < q; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    int i = q - 1;
    while (i >= 0 && idx[i] == n - q + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Calls fn(y) for each way of changing exactly the slots in `subset`;
// every call is one of prod(L for op slots) equally likely outcomes.
void for_each_change(const Genotype& x, const std::vector<int>& subset,
                     const SearchSpaceParams& p,
                     const std::function<void(const Genotype&)>& fn) {
  Genotype y = x;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == subset.size()) {
      fn(y);
      return;
    }
    const int slot = subset[k];
    if (x.is_edge_slot(slot)) {
      y[slot] = x[slot] ^ 1;
      rec(k + 1);
    } else {
      for (int value = 0; value <= p.L; ++value) {
        if (value == x[slot]) continue;
        y[slot] = static_cast<std::uint8_t>(value);
        rec(k + 1);
      }
    }
    y[slot] = x[slot];
  };
  rec(0);
}

StepDistributionQ enumerate_qbit(const Genotype& x, int q, const Genotype& opt,
                                 const SearchSpaceParams& p) {
  auto dist = empty_distribution<Rational>(p.n);
  const Rational subset_weight = Rational(1) / binom<Rational>(p.n, q);
  for_each_subset(p.n, q, [&](const std::vector<int>& subset) {
    int op_slots = 0;
    for (int s : subset) op_slots += !x.is_edge_slot(s);
    const Rational w = subset_weight / ipow(Rational(p.L), op_slots);
    for_each_change(x, subset, p,
                    [&](const Genotype& y) { dist.mass[hamming(y, opt)] += w; });
  });
  return dist;
}

std::string size_report(const char* what, double outcomes, double limit) {
  std::ostringstream os;
  os << what << ": " << outcomes << " outcomes exceeds the enumeration limit "
     << limit;
  return os.str();
}

}  // namespace

StepDistributionQ exact_enumeration_oracle(const Genotype& x,
                                           const MutationOp& op,
                                           const Genotype& opt,
                                           const SearchSpaceParams& p,
                                           double max_outcomes) {
  x.validate(p);
  opt.validate(p);
  op.validate(p);
  auto dist = empty_distribution<Rational>(p.n);
  switch (op.kind()) {
    case MutationOp::Kind::kOneBitBitFair:
      return enumerate_qbit(x, 1, opt, p);
    case MutationOp::Kind::kOneBitOffspringFair: {
      // Q equally likely offspring.
      const Rational w(1, p.Q);
      for (int slot = 0; slot < p.n; ++slot) {
        for_each_change(x, {slot}, p, [&](const Genotype& y) {
          dist.mass[hamming(y, opt)] += w;
        });
      }
      return dist;
    }
    case MutationOp::Kind::kQBit: {
      const double outcomes = static_cast<double>(binom<double>(p.n, op.q())) *
                              std::pow(static_cast<double>(p.L), op.q());
      if (outcomes > max_outcomes) {
        throw std::length_error(size_report("q-bit enumeration", outcomes,
                                            max_outcomes));
      }
      return enumerate_qbit(x, op.q(), opt, p);
    }
    case MutationOp::Kind::kBitwise: {
      const double outcomes = std::pow(static_cast<double>(p.L + 1), p.n);
      if (outcomes > max_outcomes) {
        throw std::length_error(size_report("bitwise enumeration", outcomes,
                                            max_outcomes));
      }
      const Rational rate(1, p.n);
      const Rational keep = Rational(1) - rate;
      dist.mass[hamming(x, opt)] += ipow(keep, p.n);
      for (int q = 1; q <= p.n; ++q) {
        const Rational weight =
            binom<Rational>(p.n, q) * ipow(rate, q) * ipow(keep, p.n - q);
        const auto given_q = enumerate_qbit(x, q, opt, p);
        for (int d = 0; d <= p.n; ++d) dist.mass[d] += weight * given_q.mass[d];
      }
      return dist;
    }
  }
  throw std::logic_error("unknown mutation kind");
}

StepDistributionF to_double(const StepDistributionQ& dist) {
  StepDistributionF out;
  out.mass.reserve(dist.mass.size());
  for (const auto& m : dist.mass) out.mass.push_back(m.convert_to<double>());
  return out;
}

}  // namespace enas
