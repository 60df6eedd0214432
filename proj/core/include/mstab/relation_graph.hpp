// Copyright 2026 The Authors.
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

#ifndef MSTAB_RELATION_GRAPH_HPP
#define MSTAB_RELATION_GRAPH_HPP

#include <utility>
#include <vector>

#include "mstab/ideal.hpp"
#include "mstab/matroid.hpp"

namespace mstab {

/// The linear relation graph of an equigenerated ideal: vertices are
/// variable indices, with an edge {i, j} whenever x_i * u = x_j * v
/// for generators u, v. The vertex set is the union of the edge
/// endpoints.
struct RelationGraph {
  std::vector<int> vertices;               // sorted
  std::vector<std::pair<int, int>> edges;  // (i, j) with i < j, sorted
  std::vector<std::vector<int>> components;

  int component_count() const { return static_cast<int>(components.size()); }
  bool has_edge(int i, int j) const;
};

RelationGraph build_gamma(const MonomialIdeal& a);

/// True when every pair of vertices is an edge (vacuous for graphs
/// with at most one vertex).
bool is_complete(const RelationGraph& g);

/// True when the edge set is exactly all pairs of {1..n}. For n <= 1
/// this is vacuously true. Distinct from is_complete when variables
/// are missing from the vertex set.
bool is_complete_on_ring(const RelationGraph& g, int n);

/// Cutpoints and biconnected components of a simple graph. Isolated
/// vertices form their own trivial biconnected components.
struct GraphAnalysis {
  int component_count = 0;
  std::vector<int> cutpoints;                       // sorted
  std::vector<std::vector<int>> biconnected_components;  // vertex sets
};

GraphAnalysis graph_analysis(const Graph& g);

/// Factors of an ideal along the connected components of its linear
/// relation graph. Each factor is the projection of the generators to
/// one component's variables (in ambient coordinates); `verified`
/// states whether the product of the factors reproduces the ideal.
struct Factorization {
  std::vector<MonomialIdeal> factors;
  std::vector<std::vector<int>> blocks;
  bool verified = false;
  Monomial witness;  // lies in exactly one of {ideal, product} when unverified
};

Factorization component_factorization(const MonomialIdeal& a);

}  // namespace mstab

#endif  // MSTAB_RELATION_GRAPH_HPP
