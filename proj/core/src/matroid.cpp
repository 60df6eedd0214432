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

#include "mstab/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "mstab/errors.hpp"
#include "mstab/linalg.hpp"
#include "mstab/rng.hpp"

namespace mstab {

ExchangeVerdict is_polymatroidal(const MonomialIdeal& a) {
  ExchangeVerdict verdict;
  if (a.is_zero()) {
    verdict.reason = "zero ideal";
    return verdict;
  }
  if (equigenerated_degree(a) < 0) {
    verdict.reason = "not equigenerated";
    return verdict;
  }
  const int n = a.vars();
  std::unordered_set<Monomial, MonomialHash> gens(a.gens().begin(), a.gens().end());
  for (const Monomial& u : a.gens()) {
    for (const Monomial& v : a.gens()) {
      if (u == v) continue;
      for (int i = 1; i <= n; ++i) {
        if (u.exp(i) <= v.exp(i)) continue;
        bool found = false;
        Monomial base = u.divide_by_variable(i);
        for (int j = 1; j <= n && !found; ++j) {
          if (v.exp(j) > u.exp(j) && gens.count(base.times_variable(j))) {
            found = true;
          }
        }
        if (!found) {
          verdict.u = u;
          verdict.v = v;
          verdict.var = i;
          verdict.reason = "exchange property fails";
          return verdict;
        }
      }
    }
  }
  verdict.ok = true;
  return verdict;
}

bool is_matroidal(const MonomialIdeal& a) {
  if (a.is_zero()) return false;
  for (const Monomial& g : a.gens()) {
    if (!g.is_squarefree()) return false;
  }
  return is_polymatroidal(a).ok;
}

namespace {

void enumerate_capped(int n, int d, const std::vector<int>& caps, int pos,
                      std::vector<int>& current, std::vector<Monomial>& out) {
  if (pos == n) {
    if (d == 0) out.emplace_back(current);
    return;
  }
  int remaining_cap = 0;
  for (int j = pos; j < n; ++j) remaining_cap += caps[static_cast<size_t>(j)];
  if (remaining_cap < d) return;
  int hi = std::min(caps[static_cast<size_t>(pos)], d);
  for (int e = 0; e <= hi; ++e) {
    current[static_cast<size_t>(pos)] = e;
    enumerate_capped(n, d - e, caps, pos + 1, current, out);
  }
  current[static_cast<size_t>(pos)] = 0;
}

}  // namespace

MonomialIdeal veronese_type(int n, int d, const std::vector<int>& caps) {
  if (n < 1 || d < 1) throw InputError("veronese parameters must be positive");
  if (static_cast<int>(caps.size()) != n) {
    throw InputError("veronese cap list must have one entry per variable");
  }
  for (int c : caps) {
    if (c < 1 || c > d) throw InputError("veronese caps must lie in [1, d]");
  }
  std::vector<Monomial> gens;
  std::vector<int> current(static_cast<size_t>(n), 0);
  enumerate_capped(n, d, caps, 0, current, gens);
  return MonomialIdeal::make(n, std::move(gens));
}

MonomialIdeal uniform_matroid_ideal(int n, int d) {
  return veronese_type(n, d, std::vector<int>(static_cast<size_t>(n), 1));
}

int Graph::component_count() const {
  std::vector<int> parent(static_cast<size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  int components = vertex_count;
  for (auto [a, b] : edges) {
    int ra = find(a - 1), rb = find(b - 1);
    if (ra != rb) {
      parent[static_cast<size_t>(ra)] = rb;
      --components;
    }
  }
  return components;
}

MonomialIdeal graphic_ideal(const Graph& g) {
  const int e = g.edge_count();
  if (e > 16) throw ResourceError("graphic ideals are enumerated up to 16 edges");
  if (g.vertex_count < 1) throw InputError("graph needs at least one vertex");
  std::unordered_set<long long> seen_edges;
  for (auto [a, b] : g.edges) {
    if (a < 1 || a > g.vertex_count || b < 1 || b > g.vertex_count || a == b) {
      throw InputError("bad edge");
    }
    long long key = static_cast<long long>(std::min(a, b)) * 1000 + std::max(a, b);
    if (!seen_edges.insert(key).second) throw InputError("duplicate edge");
  }
  const int rank = g.vertex_count - g.component_count();
  std::vector<Monomial> gens;
  std::vector<int> parent(static_cast<size_t>(g.vertex_count));
  for (uint32_t mask = 0; mask < (1u << e); ++mask) {
    if (__builtin_popcount(mask) != rank) continue;
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] =
            parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
      }
      return x;
    };
    bool acyclic = true;
    for (int i = 0; i < e && acyclic; ++i) {
      if (!(mask & (1u << i))) continue;
      int ra = find(g.edges[static_cast<size_t>(i)].first - 1);
      int rb = find(g.edges[static_cast<size_t>(i)].second - 1);
      if (ra == rb) {
        acyclic = false;
      } else {
        parent[static_cast<size_t>(ra)] = rb;
      }
    }
    if (!acyclic) continue;
    std::vector<int> exps(static_cast<size_t>(e), 0);
    for (int i = 0; i < e; ++i) {
      if (mask & (1u << i)) exps[static_cast<size_t>(i)] = 1;
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::make(e, std::move(gens));
}

long long spanning_forest_count(const Graph& g) {
  // Product over connected components of det of the reduced Laplacian.
  const int n = g.vertex_count;
  std::vector<int> component(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> adjacency(static_cast<size_t>(n));
  for (auto [a, b] : g.edges) {
    adjacency[static_cast<size_t>(a - 1)].push_back(b - 1);
    adjacency[static_cast<size_t>(b - 1)].push_back(a - 1);
  }
  long long total = 1;
  for (int start = 0; start < n; ++start) {
    if (component[static_cast<size_t>(start)] >= 0) continue;
    std::vector<int> verts{start};
    component[static_cast<size_t>(start)] = start;
    for (size_t k = 0; k < verts.size(); ++k) {
      for (int w : adjacency[static_cast<size_t>(verts[k])]) {
        if (component[static_cast<size_t>(w)] < 0) {
          component[static_cast<size_t>(w)] = start;
          verts.push_back(w);
        }
      }
    }
    if (verts.size() == 1) continue;
    std::vector<int> pos(static_cast<size_t>(n), -1);
    for (size_t k = 0; k < verts.size(); ++k) pos[static_cast<size_t>(verts[k])] = static_cast<int>(k);
    size_t m = verts.size() - 1;  // drop the last vertex
    std::vector<std::vector<long long>> lap(m, std::vector<long long>(m, 0));
    for (auto [a, b] : g.edges) {
      int pa = pos[static_cast<size_t>(a - 1)], pb = pos[static_cast<size_t>(b - 1)];
      if (pa < 0 || component[static_cast<size_t>(a - 1)] != start) continue;
      if (static_cast<size_t>(pa) < m) lap[static_cast<size_t>(pa)][static_cast<size_t>(pa)] += 1;
      if (static_cast<size_t>(pb) < m) lap[static_cast<size_t>(pb)][static_cast<size_t>(pb)] += 1;
      if (static_cast<size_t>(pa) < m && static_cast<size_t>(pb) < m) {
        lap[static_cast<size_t>(pa)][static_cast<size_t>(pb)] -= 1;
        lap[static_cast<size_t>(pb)][static_cast<size_t>(pa)] -= 1;
      }
    }
    total *= determinant_exact(std::move(lap));
  }
  return total;
}

MonomialIdeal transversal_ideal(int n, const std::vector<PrimeSupport>& sets) {
  if (sets.empty()) throw InputError("transversal ideal needs at least one set");
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (const PrimeSupport& s : sets) {
    if (s.vars.empty()) throw InputError("transversal sets must be nonempty");
    std::vector<Monomial> vars;
    for (int v : s.vars) vars.push_back(Monomial::variable(v, n));
    result = multiply(result, MonomialIdeal::make(n, std::move(vars)));
  }
  return result;
}

int CoverProfile::min_count() const {
  return counts.empty() ? 0 : *std::min_element(counts.begin(), counts.end());
}

CoverProfile cover_profile(const MonomialIdeal& a) {
  if (equigenerated_degree(a) < 0) {
    throw InputError("cover profile requires an equigenerated ideal");
  }
  CoverProfile profile;
  profile.counts.assign(static_cast<size_t>(a.vars()), 0);
  for (const Monomial& g : a.gens()) {
    for (int i = 1; i <= a.vars(); ++i) {
      if (g.exp(i) == 1) ++profile.counts[static_cast<size_t>(i - 1)];
    }
  }
  return profile;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kExplicit: return "explicit";
    case Family::kUniform: return "uniform";
    case Family::kVeronese: return "veronese";
    case Family::kGraphic: return "graphic";
    case Family::kTransversal: return "transversal";
  }
  return "unknown";
}

MonomialIdeal build_ideal(const MatroidSpec& spec) {
  switch (spec.family) {
    case Family::kUniform:
      return uniform_matroid_ideal(spec.n, spec.d);
    case Family::kVeronese:
      return veronese_type(spec.n, spec.d, spec.caps);
    case Family::kGraphic:
      return graphic_ideal(spec.graph);
    case Family::kTransversal:
      return transversal_ideal(spec.n, spec.sets);
    case Family::kExplicit:
      throw InputError("explicit specs carry no constructor");
  }
  throw InputError("unknown family");
}

NormalizedIdeal normalize_ideal(const MonomialIdeal& a) {
  if (a.is_zero()) throw InputError("cannot normalize the zero ideal");
  IdealInvariants inv = basic_invariants(a);
  std::vector<Monomial> divided;
  divided.reserve(a.gens().size());
  for (const Monomial& g : a.gens()) divided.push_back(g.quotient_by(inv.gcd));
  MonomialIdeal quotiented = MonomialIdeal::make(a.vars(), std::move(divided));
  NormalizedIdeal out;
  out.removed_gcd = inv.gcd;
  if (quotiented.is_unit()) {
    out.kept_vars = {};
    out.ideal = MonomialIdeal::unit(0);
    return out;
  }
  IdealInvariants qinv = basic_invariants(quotiented);
  LocalizedIdeal compact = localize(quotiented, PrimeSupport(qinv.support));
  out.kept_vars = compact.vars;
  out.ideal = std::move(compact.ideal);
  return out;
}

namespace {

Graph random_connected_graph(Rng& rng) {
  Graph g;
  g.vertex_count = rng.uniform(3, 5);
  // random spanning tree, then extra edges to guarantee a cycle
  std::vector<std::pair<int, int>> all_pairs;
  for (int a = 1; a <= g.vertex_count; ++a) {
    for (int b = a + 1; b <= g.vertex_count; ++b) all_pairs.emplace_back(a, b);
  }
  std::vector<bool> picked(all_pairs.size(), false);
  for (int v = 2; v <= g.vertex_count; ++v) {
    int u = rng.uniform(1, v - 1);
    for (size_t k = 0; k < all_pairs.size(); ++k) {
      auto [a, b] = all_pairs[k];
      if ((a == u && b == v) || (a == v && b == u)) picked[k] = true;
    }
  }
  int max_edges = std::min<int>(10, static_cast<int>(all_pairs.size()));
  int picked_count = g.vertex_count - 1;
  int target = rng.uniform(picked_count + 1, max_edges);
  while (picked_count < target) {
    size_t k = static_cast<size_t>(rng.uniform(0, static_cast<int>(all_pairs.size()) - 1));
    if (!picked[k]) {
      picked[k] = true;
      ++picked_count;
    }
  }
  for (size_t k = 0; k < all_pairs.size(); ++k) {
    if (picked[k]) g.edges.push_back(all_pairs[k]);
  }
  return g;
}

}  // namespace

RandomInstance random_instance(Family family, uint64_t seed) {
  Rng rng(seed);
  constexpr int kRetryCap = 64;
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    MatroidSpec spec;
    spec.family = family;
    spec.seed = seed;
    MonomialIdeal ideal = MonomialIdeal::zero(0);
    switch (family) {
      case Family::kGraphic: {
        spec.graph = random_connected_graph(rng);
        spec.n = spec.graph.edge_count();
        MonomialIdeal raw = graphic_ideal(spec.graph);
        NormalizedIdeal norm = normalize_ideal(raw);
        ideal = norm.ideal;
        break;
      }
      case Family::kTransversal: {
        int set_count = rng.uniform(2, 3);
        int next_var = 1;
        for (int s = 0; s < set_count; ++s) {
          int size = rng.uniform(2, 3);
          if (next_var + size - 1 > 10) {
            size = 10 - next_var + 1;
          }
          std::vector<int> vars;
          for (int k = 0; k < size; ++k) vars.push_back(next_var++);
          if (vars.size() >= 2) spec.sets.emplace_back(std::move(vars));
        }
        spec.n = next_var - 1;
        if (spec.sets.size() < 2) break;  // degenerate, resample
        ideal = transversal_ideal(spec.n, spec.sets);
        break;
      }
      case Family::kVeronese: {
        spec.n = rng.uniform(3, 6);
        spec.d = rng.uniform(2, spec.n - 1);
        spec.caps.assign(static_cast<size_t>(spec.n), 1);
        ideal = veronese_type(spec.n, spec.d, spec.caps);
        break;
      }
      default:
        throw InputError("random instances support graphic, transversal, veronese");
    }
    if (ideal.is_zero() || ideal.is_unit() || ideal.gen_count() < 2 ||
        ideal.gen_count() > 200 || ideal.vars() > 10) {
      continue;
    }
    if (!is_matroidal(ideal)) continue;
    return RandomInstance{std::move(ideal), std::move(spec)};
  }
  throw ResourceError("random instance draw kept degenerating");
}

}  // namespace mstab
