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

#ifndef MSTAB_LINALG_HPP
#define MSTAB_LINALG_HPP

#include <cstdint>
#include <vector>

namespace mstab {

/// Exact rank of an integer matrix over the rationals, by fraction-free
/// (Bareiss) elimination in 128-bit intermediates.
int rank_exact(std::vector<std::vector<long long>> m);

/// Exact determinant of a square integer matrix (Bareiss).
long long determinant_exact(std::vector<std::vector<long long>> m);

}  // namespace mstab

#endif  // MSTAB_LINALG_HPP
