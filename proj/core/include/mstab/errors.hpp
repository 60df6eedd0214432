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

#ifndef MSTAB_ERRORS_HPP
#define MSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mstab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input (bad file, mismatched ambient
/// dimensions, preconditions violated by the caller).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A configured resource cap was exceeded (generator counts, lattice
/// size, prime-sweep width).
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

/// A mathematical invariant that is guaranteed by the input class was
/// violated at runtime. This is a hard error: it means the input was
/// misclassified (for example, an Ass chain of a supposedly
/// polymatroidal ideal failed to be increasing).
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(what) {}
};

}  // namespace mstab

#endif  // MSTAB_ERRORS_HPP
