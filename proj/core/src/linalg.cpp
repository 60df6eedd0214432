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

#include "mstab/linalg.hpp"

#include <stdexcept>

#include "mstab/errors.hpp"

namespace mstab {

namespace {

using Wide = __int128;

Wide checked(Wide v) {
  constexpr Wide kLimit = static_cast<Wide>(1) << 120;
  if (v > kLimit || v < -kLimit) {
    throw ResourceError("integer overflow in exact elimination");
  }
  return v;
}

}  // namespace

int rank_exact(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<Wide>> a(rows, std::vector<Wide>(cols));
  for (size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw InputError("ragged matrix");
    for (size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];
  }
  size_t rank = 0;
  Wide prev = 1;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t k = c + 1; k < cols; ++k) {
        a[r][k] = checked(a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

long long determinant_exact(std::vector<std::vector<long long>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) throw InputError("determinant of a non-square matrix");
    for (size_t c = 0; c < n; ++c) a[r][c] = m[r][c];
  }
  Wide prev = 1;
  int sign = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      sign = -sign;
    }
    for (size_t r = c + 1; r < n; ++r) {
      for (size_t k = c + 1; k < n; ++k) {
        a[r][k] = checked(a[c][c] * a[r][k] - a[r][c] * a[c][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[c][c];
  }
  long long det = static_cast<long long>(a[n - 1][n - 1]);
  return sign > 0 ? det : -det;
}

}  // namespace mstab
