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

// Variation and survival for the (lambda+lambda) search: uniform
// initialization, four mutation operators and elitist truncation selection.

#ifndef ENAS_OPERATORS_H_
#define ENAS_OPERATORS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "enas/genotype.h"
#include "enas/rng.h"

namespace enas {

using Population = std::vector<Genotype>;

class MutationOp {
 public:
  enum class Kind {
    kOneBitBitFair,        // m1: slot uniform on [1, n]
    kOneBitOffspringFair,  // m2: each of the Q one-slot offspring at 1/Q
    kQBit,                 // m3: uniform q-subset of slots
    kBitwise,              // m4: each slot with probability 1/n
  };

  static MutationOp one_bit_bit_fair() { return MutationOp(Kind::kOneBitBitFair, 1); }
  static MutationOp one_bit_offspring_fair() {
    return MutationOp(Kind::kOneBitOffspringFair, 1);
  }
  // Throws std::invalid_argument for q < 1.
  static MutationOp qbit(int q);
  static MutationOp bitwise() { return MutationOp(Kind::kBitwise, 0); }

  // "m1" | "m2" | "m3" | "m4"; `q` is used only for m3.
  static MutationOp parse(std::string_view name, int q = 1);

  Kind kind() const { return kind_; }
  int q() const { return q_; }
  bool is_one_bit() const {
    return kind_ == Kind::kOneBitBitFair || kind_ == Kind::kOneBitOffspringFair;
  }
  std::string name() const;  // m1..m4
  // Throws std::invalid_argument when q > n for QBit.
  void validate(const SearchSpaceParams& p) const;

  friend bool operator==(const MutationOp&, const MutationOp&) = default;

 private:
  MutationOp(Kind kind, int q) : kind_(kind), q_(q) {}
  Kind kind_;
  int q_;
};

// Uniform random genotype: edge bits Bernoulli(1/2), ops uniform on [0, L].
Genotype random_genotype(const SearchSpaceParams& p, Rng& rng);

// lambda independent uniform genotypes. Throws for lambda < 1.
Population init_population(const SearchSpaceParams& p, int lambda, Rng& rng);
Population init_population(const SearchSpaceParams& p, int lambda,
                           RandomSeed seed);

// Changes slot `slot`: edges flip; ops move to a uniform value in
// [0, L] \ {current}.
void change_slot(Genotype& x, int slot, const SearchSpaceParams& p, Rng& rng);

Genotype mutate1(const Genotype& x, const SearchSpaceParams& p, Rng& rng);
Genotype mutate2(const Genotype& x, const SearchSpaceParams& p, Rng& rng);
Genotype mutate3(const Genotype& x, int q, const SearchSpaceParams& p,
                 Rng& rng);
Genotype mutate4(const Genotype& x, const SearchSpaceParams& p, Rng& rng);

// In-place dispatch; returns the number of changed slots.
int mutate_in_place(Genotype& x, const MutationOp& op,
                    const SearchSpaceParams& p, Rng& rng);
Genotype mutate(const Genotype& x, const MutationOp& op,
                const SearchSpaceParams& p, Rng& rng);

struct Survivors {
  Population members;
  std::vector<double> fitness;
};

// The lambda fittest of parents + offspring. Ties at the cut are broken
// uniformly at random. Throws std::invalid_argument when the sizes of the
// populations and fitness vectors disagree.
Survivors truncation_select(std::span<const Genotype> parents,
                            std::span<const double> parent_fitness,
                            std::span<const Genotype> offspring,
                            std::span<const double> offspring_fitness,
                            Rng& rng);

}  // namespace enas

#endif  // ENAS_OPERATORS_H_
