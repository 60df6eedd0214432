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

#ifndef MSTAB_MONOMIAL_HPP
#define MSTAB_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mstab {

/// A monomial in a fixed number of variables, stored as its exponent
/// vector. Exponents are nonnegative machine integers; arithmetic that
/// would overflow throws instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  /// The constant monomial 1 in n variables.
  static Monomial one(int n);
  /// The variable x_{index} (1-based) in n variables.
  static Monomial variable(int index, int n);

  int vars() const { return static_cast<int>(exps_.size()); }
  int exp(int index) const { return exps_[static_cast<size_t>(index - 1)]; }
  const std::vector<int>& exps() const { return exps_; }
  long long degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  /// 1-based indices of variables with positive exponent.
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;

  Monomial times(const Monomial& other) const;
  /// Componentwise max.
  Monomial lcm(const Monomial& other) const;
  /// Componentwise min.
  Monomial gcd(const Monomial& other) const;
  /// this / gcd(this, other); always defined.
  Monomial quotient_by(const Monomial& other) const;
  /// this / x_index; requires a positive exponent.
  Monomial divide_by_variable(int index) const;
  Monomial times_variable(int index) const;
  Monomial pow(int k) const;

  /// Symbolic form, e.g. "x1*x3^2"; "1" for the constant monomial.
  std::string str() const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

 private:
  std::vector<int> exps_;
};

/// Graded lexicographic comparison with x1 > x2 > ... > xn: degree
/// first, then lexicographic on exponent vectors. Generating sets are
/// kept sorted in decreasing order under this comparison.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
  size_t operator()(const Monomial& m) const;
};

}  // namespace mstab

#endif  // MSTAB_MONOMIAL_HPP
