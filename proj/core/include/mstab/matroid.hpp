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

#ifndef MSTAB_MATROID_HPP
#define MSTAB_MATROID_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mstab/ideal.hpp"

namespace mstab {

/// Outcome of the exchange-property check. On failure, (u, v, var) is
/// the violating triple: deg_{var}(u) > deg_{var}(v) but no admissible
/// swap lands in the generating set.
struct ExchangeVerdict {
  bool ok = false;
  std::string reason;  // set when the check cannot even run
  Monomial u, v;
  int var = 0;

  explicit operator bool() const { return ok; }
};

/// Checks the exchange property on an equigenerated ideal: for all
/// generators u, v and every i with deg_{x_i}(u) > deg_{x_i}(v) there
/// is a j with deg_{x_j}(v) > deg_{x_j}(u) and x_j * (u / x_i) again a
/// generator.
ExchangeVerdict is_polymatroidal(const MonomialIdeal& a);

/// Squarefree and polymatroidal.
bool is_matroidal(const MonomialIdeal& a);

/// All degree-d monomials in n variables with exponent of x_j capped
/// at caps[j-1]. Caps must lie in [1, d]; if the caps sum to less than
/// d the result is the zero ideal.
MonomialIdeal veronese_type(int n, int d, const std::vector<int>& caps);

/// Squarefree Veronese: all squarefree degree-d monomials.
MonomialIdeal uniform_matroid_ideal(int n, int d);

/// A finite simple graph on vertices 1..vertex_count with an ordered
/// edge list; edge i corresponds to variable x_i.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  /// Number of connected components (isolated vertices count).
  int component_count() const;
};

/// One squarefree generator per maximal spanning forest of the graph.
/// Enumeration is bounded at 16 edges.
MonomialIdeal graphic_ideal(const Graph& g);

/// Number of maximal spanning forests, via the matrix-tree theorem
/// (product over components of reduced-Laplacian determinants).
long long spanning_forest_count(const Graph& g);

/// Product of the monomial primes generated by each variable set.
MonomialIdeal transversal_ideal(int n, const std::vector<PrimeSupport>& sets);

/// Per-variable counts of generators with exponent exactly one.
struct CoverProfile {
  std::vector<int> counts;

  int min_count() const;
};

CoverProfile cover_profile(const MonomialIdeal& a);

enum class Family { kExplicit, kUniform, kVeronese, kGraphic, kTransversal };

std::string family_name(Family f);

/// Construction parameters for the ideal families, including seeded
/// random draws.
struct MatroidSpec {
  Family family = Family::kExplicit;
  int n = 0;
  int d = 0;
  std::vector<int> caps;            // veronese
  Graph graph;                      // graphic
  std::vector<PrimeSupport> sets;   // transversal
  uint64_t seed = 0;
};

/// Materialize a (non-random) spec.
MonomialIdeal build_ideal(const MatroidSpec& spec);

/// Divide out gcd(I) and drop variables outside the support, densely
/// reindexing. The result has gcd 1 and full support; it can be the
/// unit ideal when the input was principal.
struct NormalizedIdeal {
  MonomialIdeal ideal;
  Monomial removed_gcd;        // in the original ambient ring
  std::vector<int> kept_vars;  // original 1-based indices
};

NormalizedIdeal normalize_ideal(const MonomialIdeal& a);

/// Seeded random matroidal instance of the requested family
/// (kGraphic, kTransversal, or kVeronese), normalized to gcd 1 and
/// full support. Deterministic in the seed; degenerate draws are
/// resampled a bounded number of times.
struct RandomInstance {
  MonomialIdeal ideal;
  MatroidSpec spec;  // the parameters actually drawn
};

RandomInstance random_instance(Family family, uint64_t seed);

}  // namespace mstab

#endif  // MSTAB_MATROID_HPP
