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

#include "mstab/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "mstab/errors.hpp"

namespace mstab {

PrimeSupport::PrimeSupport(std::vector<int> v) : vars(std::move(v)) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (int x : vars) {
    if (x < 1) throw InputError("prime support indices are 1-based");
  }
}

PrimeSupport PrimeSupport::maximal(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return PrimeSupport(std::move(v));
}

bool PrimeSupport::contains(int var) const {
  return std::binary_search(vars.begin(), vars.end(), var);
}

std::string PrimeSupport::str() const {
  std::string out = "(";
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ",";
    out += "x" + std::to_string(vars[i]);
  }
  return out + ")";
}

std::vector<Monomial> minimalize(int n, std::vector<Monomial> gens) {
  for (const Monomial& g : gens) {
    if (g.vars() != n) throw InputError("generator has wrong variable count");
  }
  // Ascending by degree so that a monomial can only be divided by an
  // earlier kept one; within one degree divisibility is equality, so
  // deduping handles it.
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return grlex_greater(b, a); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  size_t degree_boundary = 0;  // kept[0..degree_boundary) have smaller degree
  long long current_degree = -1;
  for (Monomial& g : gens) {
    if (g.degree() != current_degree) {
      degree_boundary = kept.size();
      current_degree = g.degree();
    }
    bool dominated = false;
    for (size_t i = 0; i < degree_boundary; ++i) {
      if (kept[i].divides(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), grlex_greater);
  return kept;
}

MonomialIdeal MonomialIdeal::make(int n, std::vector<Monomial> gens) {
  return MonomialIdeal(n, minimalize(n, std::move(gens)));
}

MonomialIdeal MonomialIdeal::zero(int n) { return MonomialIdeal(n, {}); }

MonomialIdeal MonomialIdeal::unit(int n) {
  return MonomialIdeal(n, {Monomial::one(n)});
}

bool MonomialIdeal::contains(const Monomial& u) const {
  if (u.vars() != n_) throw InputError("variable count mismatch");
  for (const Monomial& g : gens_) {
    if (g.divides(u)) return true;
  }
  return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  for (const Monomial& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

std::string MonomialIdeal::str() const {
  std::string out = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].str();
  }
  return out + ")";
}

namespace {

bool all_same_degree(const std::vector<Monomial>& gens) {
  if (gens.empty()) return true;
  long long d = gens[0].degree();
  for (const Monomial& g : gens) {
    if (g.degree() != d) return false;
  }
  return true;
}

}  // namespace

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) throw InputError("variable count mismatch");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.vars());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  // Products of two equigenerated sets all share one degree, so the
  // minimal generators are exactly the distinct products.
  if (all_same_degree(a.gens()) && all_same_degree(b.gens())) {
    std::unordered_set<Monomial, MonomialHash> seen;
    seen.reserve(a.gens().size() * 4);
    std::vector<Monomial> prods;
    for (const Monomial& u : a.gens()) {
      for (const Monomial& v : b.gens()) {
        Monomial w = u.times(v);
        if (seen.insert(w).second) prods.push_back(std::move(w));
      }
    }
    return MonomialIdeal::make(a.vars(), std::move(prods));
  }
  std::vector<Monomial> prods;
  prods.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& u : a.gens()) {
    for (const Monomial& v : b.gens()) prods.push_back(u.times(v));
  }
  return MonomialIdeal::make(a.vars(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 0) throw InputError("negative ideal power");
  if (k == 0) return MonomialIdeal::unit(a.vars());
  // Repeated squaring with minimalization at each step.
  MonomialIdeal result = MonomialIdeal::unit(a.vars());
  MonomialIdeal base = a;
  bool result_set = false;
  int e = k;
  while (e > 0) {
    if (e & 1) {
      result = result_set ? multiply(result, base) : base;
      result_set = true;
    }
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& u) {
  if (u.vars() != a.vars()) throw InputError("variable count mismatch");
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const Monomial& g : a.gens()) gens.push_back(g.quotient_by(u));
  return MonomialIdeal::make(a.vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) throw InputError("variable count mismatch");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.vars());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> lcms;
  for (const Monomial& u : a.gens()) {
    for (const Monomial& v : b.gens()) {
      Monomial w = u.lcm(v);
      if (seen.insert(w).second) lcms.push_back(std::move(w));
    }
  }
  return MonomialIdeal::make(a.vars(), std::move(lcms));
}

MonomialIdeal socle_colon(const MonomialIdeal& j) {
  const int n = j.vars();
  if (n < 1) throw InputError("socle quotient needs at least one variable");
  if (j.is_zero() || j.is_unit()) return j;
  // (J : m) = J + E with E = intersection over i of the ideals Q_i
  // generated by { g/x_i : deg_{x_i}(g) >= 1 }. Folding the Q_i keeps
  // only generators outside J: dropping a generator that lies in J
  // never changes J + E.
  std::vector<Monomial> extra;
  bool first = true;
  for (int i = 1; i <= n; ++i) {
    std::vector<Monomial> qi;
    for (const Monomial& g : j.gens()) {
      if (g.exp(i) >= 1) qi.push_back(g.divide_by_variable(i));
    }
    qi = minimalize(n, std::move(qi));
    std::vector<Monomial> next;
    if (first) {
      next = std::move(qi);
      first = false;
    } else {
      std::unordered_set<Monomial, MonomialHash> seen;
      for (const Monomial& e : extra) {
        for (const Monomial& q : qi) {
          Monomial w = e.lcm(q);
          if (!j.contains(w) && seen.insert(w).second) next.push_back(std::move(w));
        }
      }
    }
    extra.clear();
    for (Monomial& w : minimalize(n, std::move(next))) {
      if (!j.contains(w)) extra.push_back(std::move(w));
    }
    if (extra.empty()) return j;
  }
  std::vector<Monomial> gens = j.gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return MonomialIdeal::make(n, std::move(gens));
}

Monomial LocalizedIdeal::lift(const Monomial& sub, int ambient_n) const {
  std::vector<int> e(static_cast<size_t>(ambient_n), 0);
  for (int i = 0; i < sub.vars(); ++i) {
    e[static_cast<size_t>(vars[static_cast<size_t>(i)] - 1)] = sub.exp(i + 1);
  }
  return Monomial(std::move(e));
}

LocalizedIdeal localize(const MonomialIdeal& a, const PrimeSupport& p) {
  const int n = a.vars();
  for (int v : p.vars) {
    if (v > n) throw InputError("prime support outside the ambient ring");
  }
  const int m = p.size();
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const Monomial& g : a.gens()) {
    std::vector<int> e(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      e[static_cast<size_t>(i)] = g.exp(p.vars[static_cast<size_t>(i)]);
    }
    gens.emplace_back(std::move(e));
  }
  return LocalizedIdeal{MonomialIdeal::make(m, std::move(gens)), p.vars};
}

MonomialIdeal restrict_variable(const MonomialIdeal& a, int index) {
  const int n = a.vars();
  if (index < 1 || index > n) throw InputError("variable index out of range");
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const Monomial& g : a.gens()) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(n - 1));
    for (int i = 1; i <= n; ++i) {
      if (i != index) e.push_back(g.exp(i));
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::make(n - 1, std::move(gens));
}

IdealInvariants basic_invariants(const MonomialIdeal& a) {
  if (a.is_zero()) throw InputError("the zero ideal has no invariants");
  IdealInvariants inv;
  Monomial g = a.gens()[0];
  std::vector<bool> in_supp(static_cast<size_t>(a.vars()), false);
  bool squarefree = true;
  bool equi = true;
  long long d = a.gens()[0].degree();
  for (const Monomial& u : a.gens()) {
    g = g.gcd(u);
    squarefree = squarefree && u.is_squarefree();
    equi = equi && u.degree() == d;
    for (int i = 1; i <= a.vars(); ++i) {
      if (u.exp(i) > 0) in_supp[static_cast<size_t>(i - 1)] = true;
    }
  }
  for (int i = 1; i <= a.vars(); ++i) {
    if (in_supp[static_cast<size_t>(i - 1)]) inv.support.push_back(i);
  }
  inv.gcd = g;
  inv.is_squarefree = squarefree;
  inv.is_equigenerated = equi;
  inv.degree = equi ? d : -1;
  return inv;
}

long long equigenerated_degree(const MonomialIdeal& a) {
  if (a.is_zero()) return -1;
  long long d = a.gens()[0].degree();
  for (const Monomial& g : a.gens()) {
    if (g.degree() != d) return -1;
  }
  return d;
}

}  // namespace mstab
