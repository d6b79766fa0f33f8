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

#include "clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace stemsim::internal {

BitGraph::BitGraph(std::size_t vertices)
    : rows_(vertices, std::vector<std::uint64_t>((vertices + 63) / 64, 0)) {}

void BitGraph::add_edge(std::size_t u, std::size_t v) noexcept {
  if (u == v) return;
  rows_[u][v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v][u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t BitGraph::degree(std::size_t v) const noexcept {
  std::size_t d = 0;
  for (auto word : rows_[v]) d += static_cast<std::size_t>(std::popcount(word));
  return d;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Bitset branch and bound. Vertices are relabelled so that position i in
// every bitset is the i-th vertex of the initial order; colouring then
// always picks the lowest position first.
class Search {
 public:
  Search(const BitGraph& g, std::uint64_t budget)
      : budget_(budget), words_((g.size() + 63) / 64) {
    // Smallest-last order: repeatedly remove a vertex of minimum remaining
    // degree (lowest index on ties); the search order is the reverse.
    const std::size_t n = g.size();
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    order_.resize(n);
    for (std::size_t k = n; k-- > 0;) {
      std::size_t pick = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
      }
      removed[pick] = true;
      order_[k] = pick;
      for (std::size_t u = 0; u < n; ++u) {
        if (!removed[u] && g.adjacent(pick, u)) --degree[u];
      }
    }
    adjacency_.assign(g.size(), Bits(words_, 0));
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g.adjacent(order_[i], order_[j])) set(adjacency_[i], j);
      }
    }
  }

  CliqueResult run() {
    Bits all(words_, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) set(all, i);
    expand(all);
    CliqueResult r;
    for (std::size_t i : best_) r.members.push_back(order_[i]);
    std::sort(r.members.begin(), r.members.end());
    r.exact = !out_of_budget_;
    r.nodes = nodes_;
    return r;
  }

 private:
  static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
  static void reset(Bits& b, std::size_t i) {
    b[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  // Greedy colouring of the candidate set: fills `vertices` in colour order
  // and `colours` with the colour number of each.
  void colour_sort(const Bits& candidates, std::vector<std::size_t>& vertices,
                   std::vector<std::size_t>& colours) const {
    Bits uncoloured = candidates;
    std::size_t colour = 0;
    while (any(uncoloured)) {
      ++colour;
      Bits q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          reset(q, v);
          reset(uncoloured, v);
          for (std::size_t k = w; k < words_; ++k) q[k] &= ~adjacency_[v][k];
          vertices.push_back(v);
          colours.push_back(colour);
        }
      }
    }
  }

  void expand(Bits candidates) {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return;
    }
    std::vector<std::size_t> vertices, colours;
    colour_sort(candidates, vertices, colours);
    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (current_.size() + colours[i] <= best_.size()) return;
      const std::size_t v = vertices[i];
      current_.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & adjacency_[v][w];
      if (!any(next)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (out_of_budget_) return;
      reset(candidates, v);
    }
  }

  std::uint64_t budget_;
  std::size_t words_;
  std::vector<std::size_t> order_;
  std::vector<Bits> adjacency_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

CliqueResult maximum_clique(const BitGraph& graph, std::uint64_t node_budget) {
  if (graph.size() == 0) return {};
  return Search(graph, node_budget).run();
}

}  // namespace stemsim::internal
