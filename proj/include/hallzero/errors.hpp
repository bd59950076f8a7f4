/*
   Copyright 2026 The hallzero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hallzero {

/// Malformed partition text. `position()` is the 0-based offset of the
/// offending character in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computation was refused because it exceeds a configured size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Hall polynomial interpolation needs more sample primes than the oracle
/// caps allow.
class Infeasible : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

/// An internal cross-check failed (validation point mismatch, non-integral
/// interpolant, violated triangularity).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hallzero
