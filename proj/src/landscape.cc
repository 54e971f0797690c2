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

#include "enas/landscape.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string_view>
#include <vector>

#include "enas/counting.h"
#include "enas/operators.h"

namespace enas {

DistanceLandscape::DistanceLandscape(const SearchSpaceParams& p,
                                     Genotype target)
    : params_(p), target_(std::move(target)) {
  target_.validate(p);
}

double DistanceLandscape::evaluate(const Genotype& x) const {
  return static_cast<double>(params_.n - hamming(x, target_));
}

DistanceLandscape distance_landscape(const SearchSpaceParams& p,
                                     RandomSeed seed) {
  Rng rng = make_rng(derive_seed(seed, "optimum"));
  return DistanceLandscape(p, random_genotype(p, rng));
}

BenchmarkError::BenchmarkError(Kind kind, int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      kind_(kind),
      line_(line) {}

TabularBenchmark::TabularBenchmark(
    const SearchSpaceParams& p,
    std::unordered_map<Genotype, double, GenotypeHash> records)
    : params_(p), records_(std::move(records)) {
  if (records_.empty()) {
    throw BenchmarkError(BenchmarkError::Kind::kEmpty, 0,
                         "benchmark table has no records");
  }
  double best = -INFINITY;
  double worst = INFINITY;
  int best_count = 0;
  for (const auto& [g, f] : records_) {
    g.validate(p);
    worst = std::min(worst, f);
    if (f > best) {
      best = f;
      best_ = g;
      best_count = 1;
    } else if (f == best) {
      ++best_count;
    }
  }
  if (best_count != 1) {
    throw BenchmarkError(BenchmarkError::Kind::kTiedOptimum, 0,
                         std::to_string(best_count) +
                             " genotypes share the maximum fitness");
  }
  floor_ = worst - 1.0;
}

double TabularBenchmark::evaluate(const Genotype& x) const {
  auto it = records_.find(x);
  return it == records_.end() ? floor_ : it->second;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// "v=7,L=2"
bool parse_header(std::string_view line, int& v, int& L) {
  const auto comma = line.find(',');
  if (comma == std::string_view::npos) return false;
  auto a = trim(line.substr(0, comma));
  auto b = trim(line.substr(comma + 1));
  if (!a.starts_with("v=") || !b.starts_with("L=")) return false;
  return parse_int(a.substr(2), v) && parse_int(b.substr(2), L);
}

struct RawRecord {
  std::string genotype;
  double fitness;
  int line;
};

// Infers v from the edge-part length (v(v-1)/2) and L from the largest digit.
SearchSpaceParams infer_params(const std::vector<RawRecord>& raw) {
  const auto& first = raw.front().genotype;
  const auto colon = first.find(':');
  const int edges = static_cast<int>(colon);
  int v = 2;
  while (v * (v - 1) / 2 < edges) ++v;
  if (v * (v - 1) / 2 != edges ||
      static_cast<int>(first.size() - colon - 1) != v - 2) {
    throw BenchmarkError(BenchmarkError::Kind::kShape, raw.front().line,
                         "record shape matches no node count");
  }
  int L = 1;
  for (const auto& r : raw) {
    for (std::size_t i = r.genotype.find(':') + 1; i < r.genotype.size(); ++i) {
      L = std::max(L, r.genotype[i] - '0');
    }
  }
  return SearchSpaceParams::derive(v, L);
}

}  // namespace

TabularBenchmark read_tabular_benchmark(
    std::istream& in, const std::optional<SearchSpaceParams>& expected) {
  std::optional<SearchSpaceParams> params = expected;
  std::vector<RawRecord> raw;
  std::string text;
  int line_no = 0;
  bool seen_content = false;
  while (std::getline(in, text)) {
    ++line_no;
    std::string_view line = trim(text);
    if (line.empty() || line.front() == '#') continue;
    if (!seen_content) {
      seen_content = true;
      int v = 0, L = 0;
      if (parse_header(line, v, L)) {
        SearchSpaceParams header;
        try {
          header = SearchSpaceParams::derive(v, L);
        } catch (const std::invalid_argument& e) {
          throw BenchmarkError(BenchmarkError::Kind::kMalformed, line_no,
                               e.what());
        }
        if (expected && !(*expected == header)) {
          throw BenchmarkError(
              BenchmarkError::Kind::kShape, line_no,
              "table header v=" + std::to_string(v) + ",L=" +
                  std::to_string(L) + " disagrees with the requested space");
        }
        params = header;
        continue;
      }
    }
    const auto comma = line.rfind(',');
    if (comma == std::string_view::npos) {
      throw BenchmarkError(BenchmarkError::Kind::kMalformed, line_no,
                           "expected '<genotype>,<fitness>'");
    }
    const std::string geno(trim(line.substr(0, comma)));
    const std::string value(trim(line.substr(comma + 1)));
    if (geno.find(':') == std::string::npos) {
      throw BenchmarkError(BenchmarkError::Kind::kMalformed, line_no,
                           "genotype lacks the ':' separator");
    }
    double f = 0.0;
    try {
      std::size_t used = 0;
      f = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw BenchmarkError(BenchmarkError::Kind::kMalformed, line_no,
                           "fitness '" + value + "' is not a number");
    }
    if (!std::isfinite(f)) {
      throw BenchmarkError(BenchmarkError::Kind::kMalformed, line_no,
                           "fitness must be finite");
    }
    raw.push_back({geno, f, line_no});
  }
  if (in.bad()) {
    throw BenchmarkError(BenchmarkError::Kind::kIo, line_no, "read failure");
  }
  if (raw.empty()) {
    throw BenchmarkError(BenchmarkError::Kind::kEmpty, 0,
                         "benchmark table has no records");
  }
  if (!params) params = infer_params(raw);

  std::unordered_map<Genotype, double, GenotypeHash> records;
  records.reserve(raw.size());
  std::unordered_map<Genotype, int, GenotypeHash> first_line;
  double best = -INFINITY;
  int best_line = 0;
  int tie_line = 0;
  for (const auto& r : raw) {
    Genotype g;
    try {
      g = Genotype::parse(r.genotype, *params);
    } catch (const std::invalid_argument& e) {
      throw BenchmarkError(BenchmarkError::Kind::kShape, r.line, e.what());
    }
    auto [it, inserted] = records.emplace(g, r.fitness);
    if (!inserted) {
      throw BenchmarkError(
          BenchmarkError::Kind::kDuplicate, r.line,
          "duplicate genotype " + r.genotype + " (first seen on line " +
              std::to_string(first_line[g]) + ")");
    }
    first_line.emplace(g, r.line);
    if (r.fitness > best) {
      best = r.fitness;
      best_line = r.line;
      tie_line = 0;
    } else if (r.fitness == best && tie_line == 0) {
      tie_line = r.line;
    }
  }
  if (tie_line != 0) {
    throw BenchmarkError(BenchmarkError::Kind::kTiedOptimum, tie_line,
                         "ties the maximum fitness set on line " +
                             std::to_string(best_line));
  }
  return TabularBenchmark(*params, std::move(records));
}

TabularBenchmark load_tabular_benchmark(
    const std::string& path, const std::optional<SearchSpaceParams>& expected) {
  std::ifstream in(path);
  if (!in) {
    throw BenchmarkError(BenchmarkError::Kind::kIo, 0,
                         "cannot open benchmark table '" + path + "'");
  }
  return read_tabular_benchmark(in, expected);
}

TableShape parse_table_shape(const std::string& name) {
  if (name == "correlated") return TableShape::kDistanceCorrelated;
  if (name == "random") return TableShape::kRandom;
  throw std::invalid_argument("unknown table shape '" + name +
                              "' (expected correlated|random)");
}

namespace {

// Deterministic value in [0, 0.5) per (seed, genotype).
double jitter(RandomSeed seed, const Genotype& x) {
  std::uint64_t h = seed.value;
  for (std::uint8_t s : x.slots()) h = splitmix64(h ^ s);
  return static_cast<double>(h >> 11) * 0x1.0p-53 * 0.5;
}

}  // namespace

SyntheticTableLandscape::SyntheticTableLandscape(const SearchSpaceParams& p,
                                                 RandomSeed seed)
    : params_(p), seed_(derive_seed(seed, "jitter")) {
  Rng rng = make_rng(derive_seed(seed, "optimum"));
  target_ = random_genotype(p, rng);
}

double SyntheticTableLandscape::evaluate(const Genotype& x) const {
  return static_cast<double>(params_.n - hamming(x, target_)) +
         jitter(seed_, x);
}

Genotype write_synthetic_table(std::ostream& out, const SearchSpaceParams& p,
                               RandomSeed seed, TableShape shape) {
  const BigCount size = solution_space_size(p);
  if (size > BigCount(static_cast<long long>(kMaxFullTableSize))) {
    throw std::length_error("space holds " + size.str() +
                            " genotypes; full tables are limited to 1e7");
  }
  const auto count = static_cast<std::size_t>(size);
  char buf[64];
  out << "# synthetic table, shape="
      << (shape == TableShape::kRandom ? "random" : "correlated")
      << ", seed=" << seed.value << "\n";
  out << "v=" << p.v << ",L=" << p.L << "\n";
  if (shape == TableShape::kDistanceCorrelated) {
    SyntheticTableLandscape land(p, seed);
    for_each_genotype(p, [&](const Genotype& g) {
      std::snprintf(buf, sizeof buf, "%.17g", land.evaluate(g));
      out << g.to_string() << ',' << buf << '\n';
    });
    return land.optimum();
  }
  std::vector<std::uint32_t> rank(count);
  std::iota(rank.begin(), rank.end(), 0u);
  Rng rng = make_rng(derive_seed(seed, "ranks"));
  std::shuffle(rank.begin(), rank.end(), rng);
  std::size_t i = 0;
  Genotype best;
  for_each_genotype(p, [&](const Genotype& g) {
    const std::uint32_t r = rank[i++];
    if (r + 1 == count) best = g;
    std::snprintf(buf, sizeof buf, "%.17g", (r + 0.5) / static_cast<double>(count));
    out << g.to_string() << ',' << buf << '\n';
  });
  return best;
}

}  // namespace enas
