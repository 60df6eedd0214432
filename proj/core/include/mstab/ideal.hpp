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

#ifndef MSTAB_IDEAL_HPP
#define MSTAB_IDEAL_HPP

#include <string>
#include <vector>

#include "mstab/monomial.hpp"

namespace mstab {

/// A monomial prime ideal, identified by the set of variables that
/// generate it (1-based, kept sorted ascending).
struct PrimeSupport {
  std::vector<int> vars;

  PrimeSupport() = default;
  explicit PrimeSupport(std::vector<int> v);
  /// The maximal ideal (x_1, ..., x_n).
  static PrimeSupport maximal(int n);

  int size() const { return static_cast<int>(vars.size()); }
  bool is_maximal(int n) const { return size() == n; }
  bool contains(int var) const;
  std::string str() const;

  bool operator==(const PrimeSupport& o) const { return vars == o.vars; }
  /// Canonical order: lexicographic on the sorted variable lists.
  bool operator<(const PrimeSupport& o) const { return vars < o.vars; }
};

/// A monomial ideal given by its unique minimal generating set, stored
/// minimalized and sorted in decreasing graded-lex order. The zero
/// ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  /// Minimalizes and canonically orders the given generators.
  static MonomialIdeal make(int n, std::vector<Monomial> gens);
  static MonomialIdeal zero(int n);
  static MonomialIdeal unit(int n);

  int vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int gen_count() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }

  /// Membership: some generator divides u.
  bool contains(const Monomial& u) const;
  bool contains_ideal(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& o) const {
    return n_ == o.n_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  std::string str() const;

 private:
  MonomialIdeal(int n, std::vector<Monomial> gens)
      : n_(n), gens_(std::move(gens)) {}

  int n_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset of a set of monomials, canonically
/// ordered. Idempotent and independent of input order.
std::vector<Monomial> minimalize(int n, std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);

/// k-th power by repeated squaring; power(I, 0) is the unit ideal by
/// convention.
MonomialIdeal power(const MonomialIdeal& a, int k);

/// Ideal quotient (I : u).
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& u);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// (J : m), the quotient by the maximal ideal, computed as the
/// intersection of the quotients by each variable, folded in variable
/// order with interleaved minimalization. Always contains J.
MonomialIdeal socle_colon(const MonomialIdeal& j);

/// Result of a monomial localization: the ideal lives in the subring
/// on p's variables, densely reindexed; vars[i] is the original
/// (1-based) index of subring variable i+1.
struct LocalizedIdeal {
  MonomialIdeal ideal;
  std::vector<int> vars;

  /// Lift a subring monomial back to the ambient ring.
  Monomial lift(const Monomial& sub, int ambient_n) const;
};

/// Monomial localization I(p): substitute 1 for every variable outside
/// p. For empty p this is the unit ideal in the empty subring when I
/// is nonzero, and the zero ideal otherwise.
LocalizedIdeal localize(const MonomialIdeal& a, const PrimeSupport& p);

/// Delete variable index (1-based) from every generator, landing in a
/// ring with one fewer variable.
MonomialIdeal restrict_variable(const MonomialIdeal& a, int index);

struct IdealInvariants {
  std::vector<int> support;       // 1-based variable indices
  Monomial gcd;                   // componentwise min of the generators
  bool is_squarefree = false;
  bool is_equigenerated = false;
  long long degree = -1;          // defined only when equigenerated
};

/// Basic invariants of a nonzero ideal; the zero ideal has none.
IdealInvariants basic_invariants(const MonomialIdeal& a);

/// Equigenerated degree, or -1 when the ideal is zero or generated in
/// mixed degrees.
long long equigenerated_degree(const MonomialIdeal& a);

}  // namespace mstab

#endif  // MSTAB_IDEAL_HPP
