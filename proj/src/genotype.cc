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

#include "enas/genotype.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace enas {

SearchSpaceParams SearchSpaceParams::derive(int v, int L) {
  if (v < 3) {
    throw std::invalid_argument("v must be >= 3 (need at least one internal "
                                "node), got " + std::to_string(v));
  }
  if (L < 1) {
    throw std::invalid_argument("L must be >= 1 (need an alternative "
                                "operation), got " + std::to_string(L));
  }
  SearchSpaceParams p;
  p.v = v;
  p.L = L;
  p.n1 = v * (v - 1) / 2;
  p.n2 = v - 2;
  p.n = p.n1 + p.n2;
  p.Q = p.n1 + L * p.n2;
  return p;
}

Genotype::Genotype(std::vector<std::uint8_t> edges,
                   std::vector<std::uint8_t> ops)
    : slots_(std::move(edges)), edge_count_(static_cast<int>(slots_.size())) {
  slots_.insert(slots_.end(), ops.begin(), ops.end());
}

Genotype Genotype::zeros(const SearchSpaceParams& p) {
  return Genotype(std::vector<std::uint8_t>(p.n1, 0),
                  std::vector<std::uint8_t>(p.n2, 0));
}

Genotype Genotype::parse(std::string_view text, const SearchSpaceParams& p) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos ||
      text.find(':', colon + 1) != std::string_view::npos) {
    throw std::invalid_argument("genotype text needs exactly one ':' "
                                "separator: '" + std::string(text) + "'");
  }
  if (p.L > 9) {
    throw std::invalid_argument("text form supports L <= 9 only");
  }
  std::vector<std::uint8_t> edges;
  std::vector<std::uint8_t> ops;
  for (char c : text.substr(0, colon)) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("edge part must be binary: '" +
                                  std::string(text) + "'");
    }
    edges.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  for (char c : text.substr(colon + 1)) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("op part must be decimal digits: '" +
                                  std::string(text) + "'");
    }
    ops.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  Genotype g(std::move(edges), std::move(ops));
  g.validate(p);
  return g;
}

std::string Genotype::to_string() const {
  std::string out;
  out.reserve(slots_.size() + 1);
  for (int i = 0; i < size(); ++i) {
    if (i == edge_count_) out.push_back(':');
    out.push_back(static_cast<char>('0' + slots_[i]));
  }
  if (edge_count_ == size()) out.push_back(':');
  return out;
}

bool Genotype::fits(const SearchSpaceParams& p) const {
  if (edge_count_ != p.n1 || op_count() != p.n2) return false;
  for (int i = 0; i < size(); ++i) {
    if (slots_[i] > (i < edge_count_ ? 1 : p.L)) return false;
  }
  return true;
}

void Genotype::validate(const SearchSpaceParams& p) const {
  if (edge_count_ != p.n1 || op_count() != p.n2) {
    throw std::invalid_argument(
        "genotype shape " + std::to_string(edge_count_) + "+" +
        std::to_string(op_count()) + " does not match space " +
        std::to_string(p.n1) + "+" + std::to_string(p.n2));
  }
  if (!fits(p)) {
    throw std::invalid_argument("genotype value out of range: " +
                                to_string());
  }
}

std::size_t GenotypeHash::operator()(const Genotype& g) const noexcept {
  // FNV-1a over slot values.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t s : g.slots()) {
    h ^= s;
    h *= 1099511628211ull;
  }
  h ^= static_cast<std::uint64_t>(g.edge_count());
  h *= 1099511628211ull;
  return static_cast<std::size_t>(h);
}

namespace {

void require_same_shape(const Genotype& a, const Genotype& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) {
    throw std::invalid_argument("genotypes of different shape: " +
                                a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

int hamming(const Genotype& a, const Genotype& b) {
  require_same_shape(a, b);
  int d = 0;
  for (int i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

DistanceProfile distance_profile(const Genotype& x, const Genotype& opt) {
  require_same_shape(x, opt);
  int d1 = 0;
  int d2 = 0;
  for (int i = 0; i < x.edge_count(); ++i) d1 += x[i] != opt[i];
  for (int i = x.edge_count(); i < x.size(); ++i) d2 += x[i] != opt[i];
  return DistanceProfile::of(d1, d2);
}

ArchitectureGraph decode_to_graph(const Genotype& x,
                                  const SearchSpaceParams& p) {
  x.validate(p);
  ArchitectureGraph g;
  g.v = p.v;
  g.adjacency.assign(p.v, std::vector<std::uint8_t>(p.v, 0));
  int k = 0;
  for (int i = 0; i < p.v; ++i) {
    for (int j = i + 1; j < p.v; ++j) g.adjacency[i][j] = x[k++];
  }
  for (std::uint8_t op : x.ops()) g.ops.push_back(op);
  return g;
}

Genotype encode_graph(const ArchitectureGraph& g, const SearchSpaceParams& p) {
  if (g.v != p.v || static_cast<int>(g.adjacency.size()) != p.v ||
      static_cast<int>(g.ops.size()) != p.n2) {
    throw std::invalid_argument("graph shape does not match space");
  }
  std::vector<std::uint8_t> edges;
  edges.reserve(p.n1);
  for (int i = 0; i < p.v; ++i) {
    if (static_cast<int>(g.adjacency[i].size()) != p.v) {
      throw std::invalid_argument("adjacency matrix must be v x v");
    }
    for (int j = 0; j < p.v; ++j) {
      if (j <= i && g.adjacency[i][j] != 0) {
        throw std::invalid_argument("adjacency must be strictly upper "
                                    "triangular");
      }
      if (j > i) edges.push_back(g.adjacency[i][j]);
    }
  }
  std::vector<std::uint8_t> ops(g.ops.begin(), g.ops.end());
  Genotype x(std::move(edges), std::move(ops));
  x.validate(p);
  return x;
}

void for_each_genotype(const SearchSpaceParams& p,
                       const std::function<void(const Genotype&)>& fn) {
  Genotype g = Genotype::zeros(p);
  for (;;) {
    fn(g);
    // Odometer increment from the last slot.
    int i = g.size() - 1;
    for (; i >= 0; --i) {
      const int top = g.is_edge_slot(i) ? 1 : p.L;
      if (g[i] < top) {
        ++g[i];
        break;
      }
      g[i] = 0;
    }
    if (i < 0) return;
  }
}

}  // namespace enas
