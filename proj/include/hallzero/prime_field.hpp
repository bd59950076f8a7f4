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

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hallzero {

/// Arithmetic in F_p for the small primes the oracle supports.
class PrimeField {
 public:
  using Elem = std::uint8_t;

  static constexpr std::array<int, 6> kSupported = {2, 3, 5, 7, 11, 13};

  explicit PrimeField(int p) : p_(p) {
    if (std::find(kSupported.begin(), kSupported.end(), p) == kSupported.end()) {
      throw std::invalid_argument("unsupported prime " + std::to_string(p) +
                                  " (expected one of 2, 3, 5, 7, 11, 13)");
    }
    inverse_.fill(0);
    for (int a = 1; a < p; ++a) {
      for (int b = 1; b < p; ++b) {
        if ((a * b) % p == 1) inverse_[static_cast<std::size_t>(a)] = static_cast<Elem>(b);
      }
    }
  }

  int p() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + b) % p_); }
  Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + p_ - b) % p_); }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((a * b) % p_); }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>((p_ - a) % p_); }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
    return inverse_[a];
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  int p_;
  std::array<Elem, 16> inverse_{};
};

}  // namespace hallzero
