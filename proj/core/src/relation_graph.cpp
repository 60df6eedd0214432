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

#include "mstab/relation_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "mstab/errors.hpp"

namespace mstab {

bool RelationGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

RelationGraph build_gamma(const MonomialIdeal& a) {
  if (a.is_zero()) throw InputError("relation graph of the zero ideal");
  if (equigenerated_degree(a) < 0) {
    throw InputError("relation graph requires an equigenerated ideal");
  }
  const int n = a.vars();
  // Hash join on the quotients u / x_i: two generators u, v satisfy
  // x_j * u = x_i * v exactly when u / x_i = v / x_j.
  std::unordered_map<Monomial, std::vector<int>, MonomialHash> by_quotient;
  for (const Monomial& g : a.gens()) {
    for (int i = 1; i <= n; ++i) {
      if (g.exp(i) >= 1) by_quotient[g.divide_by_variable(i)].push_back(i);
    }
  }
  std::set<std::pair<int, int>> edges;
  for (const auto& [quotient, vars] : by_quotient) {
    for (size_t x = 0; x < vars.size(); ++x) {
      for (size_t y = x + 1; y < vars.size(); ++y) {
        int i = vars[x], j = vars[y];
        if (i != j) edges.insert({std::min(i, j), std::max(i, j)});
      }
    }
  }
  RelationGraph graph;
  graph.edges.assign(edges.begin(), edges.end());
  std::set<int> verts;
  for (auto [i, j] : graph.edges) {
    verts.insert(i);
    verts.insert(j);
  }
  graph.vertices.assign(verts.begin(), verts.end());
  // components by union-find over the vertex list
  std::unordered_map<int, int> index;
  for (size_t k = 0; k < graph.vertices.size(); ++k) index[graph.vertices[k]] = static_cast<int>(k);
  std::vector<int> parent(graph.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (auto [i, j] : graph.edges) parent[static_cast<size_t>(find(index[i]))] = find(index[j]);
  std::map<int, std::vector<int>> by_root;
  for (size_t k = 0; k < graph.vertices.size(); ++k) {
    by_root[find(static_cast<int>(k))].push_back(graph.vertices[k]);
  }
  for (auto& [root, members] : by_root) graph.components.push_back(members);
  std::sort(graph.components.begin(), graph.components.end());
  return graph;
}

bool is_complete(const RelationGraph& g) {
  size_t v = g.vertices.size();
  return g.edges.size() == v * (v - 1) / 2;
}

bool is_complete_on_ring(const RelationGraph& g, int n) {
  if (n <= 1) return true;
  size_t expected = static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
  return g.vertices.size() == static_cast<size_t>(n) && g.edges.size() == expected;
}

namespace {

struct BiconnectedState {
  std::vector<std::vector<std::pair<int, int>>> adjacency;  // (neighbor, edge id)
  std::vector<int> depth, low;
  std::vector<bool> visited, is_cut;
  std::vector<int> edge_stack;  // edge ids
  std::vector<std::vector<int>> edge_groups;

  void pop_group(int until_edge) {
    std::vector<int> group;
    for (;;) {
      int e = edge_stack.back();
      edge_stack.pop_back();
      group.push_back(e);
      if (e == until_edge) break;
    }
    edge_groups.push_back(std::move(group));
  }
};

// Standard depth-first lowlink search, recursive; desk-scale graphs.
void dfs(const Graph& g, BiconnectedState& st, int v, int parent_edge, int d) {
  st.visited[static_cast<size_t>(v)] = true;
  st.depth[static_cast<size_t>(v)] = st.low[static_cast<size_t>(v)] = d;
  int child_count = 0;
  for (auto [w, eid] : st.adjacency[static_cast<size_t>(v)]) {
    if (eid == parent_edge) continue;
    if (st.visited[static_cast<size_t>(w)]) {
      if (st.depth[static_cast<size_t>(w)] < st.depth[static_cast<size_t>(v)]) {
        st.edge_stack.push_back(eid);
        st.low[static_cast<size_t>(v)] =
            std::min(st.low[static_cast<size_t>(v)], st.depth[static_cast<size_t>(w)]);
      }
      continue;
    }
    st.edge_stack.push_back(eid);
    ++child_count;
    dfs(g, st, w, eid, d + 1);
    st.low[static_cast<size_t>(v)] =
        std::min(st.low[static_cast<size_t>(v)], st.low[static_cast<size_t>(w)]);
    if (st.low[static_cast<size_t>(w)] >= st.depth[static_cast<size_t>(v)]) {
      st.pop_group(eid);
      if (d > 0) st.is_cut[static_cast<size_t>(v)] = true;
    }
  }
  if (d == 0 && child_count > 1) st.is_cut[static_cast<size_t>(v)] = true;
}

}  // namespace

GraphAnalysis graph_analysis(const Graph& g) {
  const int n = g.vertex_count;
  BiconnectedState st;
  st.adjacency.resize(static_cast<size_t>(n));
  st.depth.assign(static_cast<size_t>(n), 0);
  st.low.assign(static_cast<size_t>(n), 0);
  st.visited.assign(static_cast<size_t>(n), false);
  st.is_cut.assign(static_cast<size_t>(n), false);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    st.adjacency[static_cast<size_t>(a - 1)].emplace_back(b - 1, static_cast<int>(e));
    st.adjacency[static_cast<size_t>(b - 1)].emplace_back(a - 1, static_cast<int>(e));
  }
  GraphAnalysis out;
  out.component_count = g.component_count();
  for (int v = 0; v < n; ++v) {
    if (!st.visited[static_cast<size_t>(v)]) {
      if (st.adjacency[static_cast<size_t>(v)].empty()) {
        st.visited[static_cast<size_t>(v)] = true;
        out.biconnected_components.push_back({v + 1});
        continue;
      }
      dfs(g, st, v, -1, 0);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (st.is_cut[static_cast<size_t>(v)]) out.cutpoints.push_back(v + 1);
  }
  for (const std::vector<int>& group : st.edge_groups) {
    std::set<int> verts;
    for (int eid : group) {
      verts.insert(g.edges[static_cast<size_t>(eid)].first);
      verts.insert(g.edges[static_cast<size_t>(eid)].second);
    }
    out.biconnected_components.emplace_back(verts.begin(), verts.end());
  }
  std::sort(out.biconnected_components.begin(), out.biconnected_components.end());
  return out;
}

Factorization component_factorization(const MonomialIdeal& a) {
  IdealInvariants inv = basic_invariants(a);
  if (!inv.gcd.is_one() || static_cast<int>(inv.support.size()) != a.vars()) {
    throw InputError("factorization requires gcd 1 and full support");
  }
  if (!is_matroidal(a)) {
    throw InputError("factorization is defined for matroidal ideals");
  }
  RelationGraph gamma = build_gamma(a);
  Factorization out;
  out.blocks = gamma.components;
  size_t covered = 0;
  for (const std::vector<int>& block : out.blocks) covered += block.size();
  if (covered != static_cast<size_t>(a.vars())) {
    // The relation graph of a matroidal ideal with gcd 1 and full
    // support covers every variable; reaching this means the input was
    // misclassified upstream.
    throw InvariantError("relation graph misses variables of a matroidal ideal");
  }
  MonomialIdeal product = MonomialIdeal::unit(a.vars());
  for (const std::vector<int>& block : out.blocks) {
    std::vector<Monomial> projected;
    projected.reserve(a.gens().size());
    for (const Monomial& g : a.gens()) {
      std::vector<int> exps(static_cast<size_t>(a.vars()), 0);
      for (int v : block) exps[static_cast<size_t>(v - 1)] = g.exp(v);
      projected.emplace_back(std::move(exps));
    }
    MonomialIdeal factor = MonomialIdeal::make(a.vars(), std::move(projected));
    product = multiply(product, factor);
    out.factors.push_back(std::move(factor));
  }
  if (product == a) {
    out.verified = true;
  } else {
    out.verified = false;
    for (const Monomial& g : product.gens()) {
      if (!a.contains(g)) {
        out.witness = g;
        break;
      }
    }
    if (out.witness.vars() == 0) {
      for (const Monomial& g : a.gens()) {
        if (!product.contains(g)) {
          out.witness = g;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace mstab
