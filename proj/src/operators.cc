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

#include "enas/operators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <ranges>
#include <stdexcept>
#include <string>

namespace enas {

MutationOp MutationOp::qbit(int q) {
  if (q < 1) {
    throw std::invalid_argument("q-bit mutation needs q >= 1, got " +
                                std::to_string(q));
  }
  return MutationOp(Kind::kQBit, q);
}

MutationOp MutationOp::parse(std::string_view name, int q) {
  if (name == "m1") return one_bit_bit_fair();
  if (name == "m2") return one_bit_offspring_fair();
  if (name == "m3") return qbit(q);
  if (name == "m4") return bitwise();
  throw std::invalid_argument("unknown operator '" + std::string(name) +
                              "' (expected m1, m2, m3 or m4)");
}

std::string MutationOp::name() const {
  switch (kind_) {
    case Kind::kOneBitBitFair: return "m1";
    case Kind::kOneBitOffspringFair: return "m2";
    case Kind::kQBit: return "m3";
    case Kind::kBitwise: return "m4";
  }
  return "?";
}

void MutationOp::validate(const SearchSpaceParams& p) const {
  if (kind_ == Kind::kQBit && q_ > p.n) {
    throw std::invalid_argument("q = " + std::to_string(q_) +
                                " exceeds genotype length " +
                                std::to_string(p.n));
  }
}

Genotype random_genotype(const SearchSpaceParams& p, Rng& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> op(0, p.L);
  std::vector<std::uint8_t> edges(p.n1);
  std::vector<std::uint8_t> ops(p.n2);
  for (auto& e : edges) e = static_cast<std::uint8_t>(bit(rng));
  for (auto& o : ops) o = static_cast<std::uint8_t>(op(rng));
  return Genotype(std::move(edges), std::move(ops));
}

Population init_population(const SearchSpaceParams& p, int lambda, Rng& rng) {
  if (lambda < 1) {
    throw std::invalid_argument("population size must be >= 1, got " +
                                std::to_string(lambda));
  }
  Population pop;
  pop.reserve(lambda);
  for (int i = 0; i < lambda; ++i) pop.push_back(random_genotype(p, rng));
  return pop;
}

Population init_population(const SearchSpaceParams& p, int lambda,
                           RandomSeed seed) {
  Rng rng = make_rng(seed);
  return init_population(p, lambda, rng);
}

void change_slot(Genotype& x, int slot, const SearchSpaceParams& p, Rng& rng) {
  if (x.is_edge_slot(slot)) {
    x[slot] ^= 1;
    return;
  }
  std::uniform_int_distribution<int> other(0, p.L - 1);
  const int u = other(rng);
  x[slot] = static_cast<std::uint8_t>(u >= x[slot] ? u + 1 : u);
}

namespace {

int mutate1_in_place(Genotype& x, const SearchSpaceParams& p, Rng& rng) {
  std::uniform_int_distribution<int> slot(0, p.n - 1);
  change_slot(x, slot(rng), p, rng);
  return 1;
}

int mutate2_in_place(Genotype& x, const SearchSpaceParams& p, Rng& rng) {
  // r in [0, Q): the first n1 values flip an edge; the remaining L*n2 values
  // name (op slot, target value) pairs, L per op slot.
  std::uniform_int_distribution<int> pick(0, p.Q - 1);
  const int r = pick(rng);
  if (r < p.n1) {
    x[r] ^= 1;
    return 1;
  }
  const int k = r - p.n1;
  const int slot = p.n1 + k / p.L;
  const int u = k % p.L;
  x[slot] = static_cast<std::uint8_t>(u >= x[slot] ? u + 1 : u);
  return 1;
}

int mutate3_in_place(Genotype& x, int q, const SearchSpaceParams& p,
                     Rng& rng) {
  if (q < 1 || q > p.n) {
    throw std::invalid_argument("q must be in [1, n], got " +
                                std::to_string(q));
  }
  // Selection sampling: each q-subset of slots equally likely.
  int needed = q;
  for (int slot = 0; slot < p.n && needed > 0; ++slot) {
    std::uniform_int_distribution<int> draw(0, p.n - slot - 1);
    if (draw(rng) < needed) {
      change_slot(x, slot, p, rng);
      --needed;
    }
  }
  return q;
}

int mutate4_in_place(Genotype& x, const SearchSpaceParams& p, Rng& rng) {
  std::uniform_int_distribution<int> hit(0, p.n - 1);
  int changed = 0;
  for (int slot = 0; slot < p.n; ++slot) {
    if (hit(rng) == 0) {
      change_slot(x, slot, p, rng);
      ++changed;
    }
  }
  return changed;
}

}  // namespace

int mutate_in_place(Genotype& x, const MutationOp& op,
                    const SearchSpaceParams& p, Rng& rng) {
  switch (op.kind()) {
    case MutationOp::Kind::kOneBitBitFair: return mutate1_in_place(x, p, rng);
    case MutationOp::Kind::kOneBitOffspringFair:
      return mutate2_in_place(x, p, rng);
    case MutationOp::Kind::kQBit: return mutate3_in_place(x, op.q(), p, rng);
    case MutationOp::Kind::kBitwise: return mutate4_in_place(x, p, rng);
  }
  return 0;
}

Genotype mutate(const Genotype& x, const MutationOp& op,
                const SearchSpaceParams& p, Rng& rng) {
  Genotype y = x;
  mutate_in_place(y, op, p, rng);
  return y;
}

Genotype mutate1(const Genotype& x, const SearchSpaceParams& p, Rng& rng) {
  return mutate(x, MutationOp::one_bit_bit_fair(), p, rng);
}

Genotype mutate2(const Genotype& x, const SearchSpaceParams& p, Rng& rng) {
  return mutate(x, MutationOp::one_bit_offspring_fair(), p, rng);
}

Genotype mutate3(const Genotype& x, int q, const SearchSpaceParams& p,
                 Rng& rng) {
  return mutate(x, MutationOp::qbit(q), p, rng);
}

Genotype mutate4(const Genotype& x, const SearchSpaceParams& p, Rng& rng) {
  return mutate(x, MutationOp::bitwise(), p, rng);
}

Survivors truncation_select(std::span<const Genotype> parents,
                            std::span<const double> parent_fitness,
                            std::span<const Genotype> offspring,
                            std::span<const double> offspring_fitness,
                            Rng& rng) {
  const std::size_t lambda = parents.size();
  if (lambda == 0 || offspring.size() != lambda) {
    throw std::invalid_argument("truncation selection needs lambda parents "
                                "and lambda offspring");
  }
  if (parent_fitness.size() != lambda || offspring_fitness.size() != lambda) {
    throw std::invalid_argument("every parent and offspring needs a fitness "
                                "value");
  }
  auto fitness_of = [&](std::size_t i) {
    return i < lambda ? parent_fitness[i] : offspring_fitness[i - lambda];
  };
  std::vector<std::size_t> order(2 * lambda);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return fitness_of(a) > fitness_of(b);
                   });
  Survivors out;
  out.members.reserve(lambda);
  out.fitness.reserve(lambda);
  for (std::size_t k = 0; k < lambda; ++k) {
    const std::size_t i = order[k];
    out.members.push_back(i < lambda ? parents[i] : offspring[i - lambda]);
    out.fitness.push_back(fitness_of(i));
  }
  return out;
}

}  // namespace enas
