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

#include "mstab/monomial.hpp"

#include <algorithm>
#include <limits>

#include "mstab/errors.hpp"

namespace mstab {

namespace {
constexpr int kMaxExponent = 1 << 24;  // overflow guard, far beyond desk scale

int checked_add(int a, int b) {
  long long s = static_cast<long long>(a) + b;
  if (s > kMaxExponent) throw InputError("monomial exponent overflow");
  return static_cast<int>(s);
}
}  // namespace

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw InputError("monomial exponent must be nonnegative");
    if (e > kMaxExponent) throw InputError("monomial exponent overflow");
  }
}

Monomial Monomial::one(int n) {
  if (n < 0) throw InputError("variable count must be nonnegative");
  return Monomial(std::vector<int>(static_cast<size_t>(n), 0));
}

Monomial Monomial::variable(int index, int n) {
  if (index < 1 || index > n) throw InputError("variable index out of range");
  std::vector<int> e(static_cast<size_t>(n), 0);
  e[static_cast<size_t>(index - 1)] = 1;
  return Monomial(std::move(e));
}

long long Monomial::degree() const {
  long long d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < vars(); ++i) {
    if (exps_[static_cast<size_t>(i)] > 0) s.push_back(i + 1);
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (vars() != other.vars()) throw InputError("variable count mismatch");
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (vars() != other.vars()) throw InputError("variable count mismatch");
  std::vector<int> e(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) {
    e[i] = checked_add(exps_[i], other.exps_[i]);
  }
  Monomial m;
  m.exps_ = std::move(e);
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (vars() != other.vars()) throw InputError("variable count mismatch");
  std::vector<int> e(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  Monomial m;
  m.exps_ = std::move(e);
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  if (vars() != other.vars()) throw InputError("variable count mismatch");
  std::vector<int> e(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
  Monomial m;
  m.exps_ = std::move(e);
  return m;
}

Monomial Monomial::quotient_by(const Monomial& other) const {
  if (vars() != other.vars()) throw InputError("variable count mismatch");
  std::vector<int> e(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i] - other.exps_[i], 0);
  Monomial m;
  m.exps_ = std::move(e);
  return m;
}

Monomial Monomial::divide_by_variable(int index) const {
  if (index < 1 || index > vars() || exps_[static_cast<size_t>(index - 1)] == 0) {
    throw InputError("division by a variable with zero exponent");
  }
  Monomial m = *this;
  --m.exps_[static_cast<size_t>(index - 1)];
  return m;
}

Monomial Monomial::times_variable(int index) const {
  if (index < 1 || index > vars()) throw InputError("variable index out of range");
  Monomial m = *this;
  m.exps_[static_cast<size_t>(index - 1)] =
      checked_add(m.exps_[static_cast<size_t>(index - 1)], 1);
  return m;
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw InputError("negative monomial power");
  std::vector<int> e(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) {
    long long v = static_cast<long long>(exps_[i]) * k;
    if (v > kMaxExponent) throw InputError("monomial exponent overflow");
    e[i] = static_cast<int>(v);
  }
  Monomial m;
  m.exps_ = std::move(e);
  return m;
}

std::string Monomial::str() const {
  std::string out;
  for (int i = 0; i < vars(); ++i) {
    int e = exps_[static_cast<size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  long long da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exps() > b.exps();
}

size_t MonomialHash::operator()(const Monomial& m) const {
  // FNV-1a over exponents
  uint64_t h = 1469598103934665603ULL;
  for (int e : m.exps()) {
    h ^= static_cast<uint64_t>(e) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<size_t>(h);
}

}  // namespace mstab
