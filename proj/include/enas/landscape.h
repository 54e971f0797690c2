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

// Fitness landscapes over the genotype space: the Hamming surrogate,
// tabular benchmarks read from text files, and synthetic tables.
//
// Table file format, one record per line:
//
//   # comment
//   v=7,L=2                          (optional, first non-comment line)
//   110011000101000100101:12012,0.9432
//
// Every landscape has exactly one global maximum.

#ifndef ENAS_LANDSCAPE_H_
#define ENAS_LANDSCAPE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "enas/genotype.h"
#include "enas/rng.h"

namespace enas {

class FitnessLandscape {
 public:
  virtual ~FitnessLandscape() = default;

  virtual double evaluate(const Genotype& x) const = 0;
  virtual const Genotype& optimum() const = 0;
  virtual const SearchSpaceParams& params() const = 0;

  // True when fitness is a strictly decreasing function of the Hamming
  // distance to optimum(), possibly with jitter that never reorders
  // distance classes.
  virtual bool ordered_by_distance() const { return false; }
};

// f(x) = n - hamming(x, target).
class DistanceLandscape final : public FitnessLandscape {
 public:
  DistanceLandscape(const SearchSpaceParams& p, Genotype target);

  double evaluate(const Genotype& x) const override;
  const Genotype& optimum() const override { return target_; }
  const SearchSpaceParams& params() const override { return params_; }
  bool ordered_by_distance() const override { return true; }

 private:
  SearchSpaceParams params_;
  Genotype target_;
};

// Hidden target drawn from `seed`.
DistanceLandscape distance_landscape(const SearchSpaceParams& p,
                                     RandomSeed seed);

class BenchmarkError : public std::runtime_error {
 public:
  enum class Kind { kIo, kMalformed, kShape, kDuplicate, kTiedOptimum, kEmpty };

  BenchmarkError(Kind kind, int line, const std::string& what);

  Kind kind() const { return kind_; }
  int line() const { return line_; }  // 1-based, 0 when not line specific

 private:
  Kind kind_;
  int line_;
};

// Lookup table from genotype to fitness. Genotypes absent from the table
// evaluate to floor() = table minimum - 1.
class TabularBenchmark final : public FitnessLandscape {
 public:
  TabularBenchmark(const SearchSpaceParams& p,
                   std::unordered_map<Genotype, double, GenotypeHash> records);

  double evaluate(const Genotype& x) const override;
  const Genotype& optimum() const override { return best_; }
  const SearchSpaceParams& params() const override { return params_; }

  std::size_t size() const { return records_.size(); }
  double floor() const { return floor_; }
  bool contains(const Genotype& x) const { return records_.contains(x); }

 private:
  SearchSpaceParams params_;
  std::unordered_map<Genotype, double, GenotypeHash> records_;
  Genotype best_;
  double floor_ = 0.0;
};

// Parses the table format. Without a header line, `expected` supplies the
// space; with neither, v is inferred from the record shape and L from the
// largest op digit. Throws BenchmarkError (duplicate genotype, tied maximum,
// malformed line) carrying the 1-based line number.
TabularBenchmark read_tabular_benchmark(
    std::istream& in,
    const std::optional<SearchSpaceParams>& expected = std::nullopt);
TabularBenchmark load_tabular_benchmark(
    const std::string& path,
    const std::optional<SearchSpaceParams>& expected = std::nullopt);

enum class TableShape {
  kDistanceCorrelated,  // n - distance + jitter in [0, 0.5)
  kRandom,              // distinct values, uniformly shuffled ranks
};

TableShape parse_table_shape(const std::string& name);

// The distance-correlated table evaluated lazily: any genotype gets the
// value a full written table would hold, so spaces far too large to write
// out can still be searched.
class SyntheticTableLandscape final : public FitnessLandscape {
 public:
  SyntheticTableLandscape(const SearchSpaceParams& p, RandomSeed seed);

  double evaluate(const Genotype& x) const override;
  const Genotype& optimum() const override { return target_; }
  const SearchSpaceParams& params() const override { return params_; }
  bool ordered_by_distance() const override { return true; }

 private:
  SearchSpaceParams params_;
  RandomSeed seed_;
  Genotype target_;
};

// Largest space for which a full table may be written.
inline constexpr double kMaxFullTableSize = 1e7;

// Writes a header and one record per genotype of the space. Returns the
// optimum. Throws std::length_error when |S| > kMaxFullTableSize.
Genotype write_synthetic_table(std::ostream& out, const SearchSpaceParams& p,
                               RandomSeed seed, TableShape shape);

}  // namespace enas

#endif  // ENAS_LANDSCAPE_H_
