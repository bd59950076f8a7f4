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
#include <cstdint>
#include <string>

#include "degeneration.hpp"
#include "partition.hpp"

namespace hallzero {

// Modules M(lambda) are identified with their partitions; the monoid of
// generic extensions is (P, +) and the monoid of direct sums is (P, union).

/// M(nu) * M(mu): the <=_deg-minimal extension, M(nu + mu).
inline Partition generic_extension(const Partition& nu, const Partition& mu) { return add(nu, mu); }

/// M(nu) (+) M(mu) = M(nu union mu), the <=_deg-maximal extension.
inline Partition direct_sum(const Partition& nu, const Partition& mu) { return unite(nu, mu); }

/// Generic extension of two modules given by already-conjugated partitions,
/// computed through the union route: conjugate(conjugate(a) u conjugate(b)).
/// Always equals add(a, b).
inline Partition generic_extension_dual(const Partition& alpha_bar, const Partition& beta_bar) {
  return conjugate(unite(conjugate(alpha_bar), conjugate(beta_bar)));
}

/// Necessary condition for M(sigma) to be an extension of M(mu) by M(nu):
/// every prefix sum of sigma is bounded by that of mu + nu.
inline bool check_extension_bound(const Partition& sigma, const Partition& mu, const Partition& nu) {
  if (sigma.weight() != mu.weight() + nu.weight()) {
    throw std::invalid_argument("check_extension_bound: weight of " + format(sigma) +
                                " differs from weight of " + format(mu) + " plus " + format(nu));
  }
  const Partition bound = add(mu, nu);
  const std::size_t len = std::max(sigma.length(), bound.length());
  std::int64_t s = 0;
  std::int64_t b = 0;
  for (std::size_t i = 0; i < len; ++i) {
    s += sigma[i];
    b += bound[i];
    if (s > b) return false;
  }
  return true;
}

}  // namespace hallzero
