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

// Combination encoding of cell architectures: a binary edge part (the upper
// triangle of the v x v adjacency matrix) followed by a categorical operation
// part (one value in [0, L] per internal node).

#ifndef ENAS_GENOTYPE_H_
#define ENAS_GENOTYPE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace enas {

// Geometry of the architecture space. Construct through derive().
struct SearchSpaceParams {
  int v = 0;   // node count, including input and output
  int L = 0;   // largest operation index; L + 1 operation types
  int n1 = 0;  // edge slots, v(v-1)/2
  int n2 = 0;  // internal nodes, v-2
  int n = 0;   // genotype length, n1 + n2
  int Q = 0;   // distinct one-slot offspring, n1 + L*n2

  // Throws std::invalid_argument for v < 3 or L < 1.
  static SearchSpaceParams derive(int v, int L);

  friend bool operator==(const SearchSpaceParams&,
                         const SearchSpaceParams&) = default;
};

// One architecture. Slots [0, n1) hold edge bits, slots [n1, n) hold
// operation values. The genotype itself does not know L; validate() checks
// it against a SearchSpaceParams.
class Genotype {
 public:
  Genotype() = default;
  Genotype(std::vector<std::uint8_t> edges, std::vector<std::uint8_t> ops);

  // All-zero genotype for the given space.
  static Genotype zeros(const SearchSpaceParams& p);

  // Parses "<edge-bits>:<op-digits>", e.g. "110011000101000100101:12012".
  // Throws std::invalid_argument on malformed text or a shape that does not
  // match `p`.
  static Genotype parse(std::string_view text, const SearchSpaceParams& p);

  std::string to_string() const;

  // Throws std::invalid_argument if lengths or values do not fit `p`.
  void validate(const SearchSpaceParams& p) const;
  bool fits(const SearchSpaceParams& p) const;

  int size() const { return static_cast<int>(slots_.size()); }
  int edge_count() const { return edge_count_; }
  int op_count() const { return size() - edge_count_; }
  bool is_edge_slot(int slot) const { return slot < edge_count_; }

  std::uint8_t operator[](int slot) const { return slots_[slot]; }
  std::uint8_t& operator[](int slot) { return slots_[slot]; }

  std::span<const std::uint8_t> slots() const { return slots_; }
  std::span<const std::uint8_t> edges() const {
    return std::span<const std::uint8_t>(slots_).first(edge_count_);
  }
  std::span<const std::uint8_t> ops() const {
    return std::span<const std::uint8_t>(slots_).subspan(edge_count_);
  }

  friend bool operator==(const Genotype&, const Genotype&) = default;

 private:
  std::vector<std::uint8_t> slots_;
  int edge_count_ = 0;
};

struct GenotypeHash {
  std::size_t operator()(const Genotype& g) const noexcept;
};

// Hamming decomposition of a genotype against a reference.
struct DistanceProfile {
  int d1 = 0;  // edge-part mismatches
  int d2 = 0;  // op-part mismatches
  int d = 0;   // d1 + d2

  static DistanceProfile of(int d1, int d2) { return {d1, d2, d1 + d2}; }
  bool feasible(const SearchSpaceParams& p) const {
    return d1 >= 0 && d2 >= 0 && d1 <= p.n1 && d2 <= p.n2 && d == d1 + d2;
  }
  friend bool operator==(const DistanceProfile&,
                         const DistanceProfile&) = default;
};

// Number of differing slots. Throws std::invalid_argument when the two
// genotypes do not share a shape.
int hamming(const Genotype& a, const Genotype& b);

DistanceProfile distance_profile(const Genotype& x, const Genotype& opt);

// Upper-triangular adjacency plus per-internal-node operation labels.
struct ArchitectureGraph {
  int v = 0;
  std::vector<std::vector<std::uint8_t>> adjacency;  // v x v, zero on/below
                                                     // the diagonal
  std::vector<int> ops;                              // v-2 labels

  friend bool operator==(const ArchitectureGraph&,
                         const ArchitectureGraph&) = default;
};

// Edge slot k maps to cell (i, j), i < j, enumerated by increasing i then
// increasing j.
ArchitectureGraph decode_to_graph(const Genotype& x, const SearchSpaceParams& p);
Genotype encode_graph(const ArchitectureGraph& g, const SearchSpaceParams& p);

// Calls `fn` once for every genotype of the space, in lexicographic slot
// order. Intended for small spaces (tests, table generation).
void for_each_genotype(const SearchSpaceParams& p,
                       const std::function<void(const Genotype&)>& fn);

}  // namespace enas

#endif  // ENAS_GENOTYPE_H_
