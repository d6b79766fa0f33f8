// Copyright 2026 The stemsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STEMSIM_SRC_CLIQUE_HPP_
#define STEMSIM_SRC_CLIQUE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stemsim::internal {

// Dense undirected graph stored as adjacency bit rows.
class BitGraph {
 public:
  explicit BitGraph(std::size_t vertices);

  void add_edge(std::size_t u, std::size_t v) noexcept;
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (rows_[u][v / 64] >> (v % 64)) & 1u;
  }
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t degree(std::size_t v) const noexcept;

 private:
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct CliqueResult {
  std::vector<std::size_t> members;  // ascending vertex index
  bool exact = true;
  std::uint64_t nodes = 0;
};

// Bitset branch and bound with a greedy-colouring bound. Vertices are
// ordered smallest-last by degree, ties broken by lower index; the search
// stops early (exact = false) once node_budget expansions have been made.
CliqueResult maximum_clique(const BitGraph& graph, std::uint64_t node_budget);

}  // namespace stemsim::internal

#endif  // STEMSIM_SRC_CLIQUE_HPP_
