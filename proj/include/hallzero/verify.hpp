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
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "degeneration.hpp"
#include "generic_extension.hpp"
#include "h0_algebra.hpp"
#include "hall_oracle.hpp"
#include "hall_polynomial.hpp"
#include "partition.hpp"

namespace hallzero {

struct CheckReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // beyond the oracle's enumeration budget
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }
};

namespace detail {

inline std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++report_.cases;
    if (ok) return;
    if (report_.failures++ == 0) report_.first_failure = describe();
  }

  void skip() { ++report_.skipped; }

  CheckReport take() { return std::move(report_); }

 private:
  CheckReport report_;
};

}  // namespace detail

/// F(M(a)) F(M(b)) = F(M(a + b)) for |a| + |b| <= max_weight.
inline CheckReport verify_homomorphism_law(int max_weight) {
  detail::Recorder rec("homomorphism law");
  const auto all = detail::partitions_up_to(max_weight);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a.weight() + b.weight() > max_weight) continue;
      rec.expect(h0_multiply(f_map(a), f_map(b)) == f_map(add(a, b)),
                 [&] { return "F(" + format(a) + ")F(" + format(b) + ")"; });
    }
  }
  return rec.take();
}

/// Interpolated Hall polynomials reproduce the oracle at their sample
/// primes and their constant terms match the Moebius computation.
/// Triples beyond the prime budget are skipped.
inline CheckReport verify_oracle_agreement(int max_weight, HallOracle& oracle = shared_oracle()) {
  detail::Recorder rec("oracle agreement");
  for (int n = 0; n <= max_weight; ++n) {
    for (const auto& g : partitions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& a : partitions_of(n - k)) {
          for (const auto& b : partitions_of(k)) {
            if (!interpolation_feasible(a, b, g, oracle.caps())) continue;
            auto label = [&] { return format(a) + " " + format(b) + " " + format(g); };
            try {
              const auto fit = interpolate_hall_poly_fit(a, b, g, oracle);
              bool ok = fit.poly.coefficient(0) == constant_term(a, b, g);
              for (const auto& [p, count] : fit.samples) ok = ok && fit.poly.evaluate(p) == count;
              rec.expect(ok, label);
            } catch (const Infeasible&) {
              rec.skip();
            } catch (const ConsistencyError& e) {
              rec.expect(false, [&] { return label() + ": " + e.what(); });
            }
          }
        }
      }
    }
  }
  return rec.take();
}

/// Products of columns: constant term is 1 exactly when the F_2 count is
/// positive, 0 otherwise.
inline CheckReport verify_column_products(int max_weight, HallOracle& oracle = shared_oracle()) {
  detail::Recorder rec("column products");
  for (int n = 0; n <= max_weight; ++n) {
    for (int m = 0; n + m <= max_weight; ++m) {
      const auto a = Partition::column(n);
      const auto b = Partition::column(m);
      for (const auto& g : partitions_of(n + m)) {
        const Integer expected = oracle.hall_number(g, a, b, 2) > 0 ? 1 : 0;
        rec.expect(constant_term(a, b, g) == expected,
                   [&] { return format(a) + " " + format(b) + " " + format(g); });
      }
    }
  }
  return rec.take();
}

/// Every extension sigma of M(mu) by M(nu) (F_2 count > 0) lies between
/// M(mu + nu) and M(mu u nu) and satisfies the prefix-sum bound; the
/// generic extension itself occurs.
inline CheckReport verify_extension_extremes(int max_weight, HallOracle& oracle = shared_oracle()) {
  detail::Recorder rec("generic extension minimality");
  const auto all = detail::partitions_up_to(max_weight);
  for (const auto& mu : all) {
    for (const auto& nu : all) {
      const auto n = mu.weight() + nu.weight();
      if (n > max_weight) continue;
      const auto generic = generic_extension(mu, nu);
      rec.expect(oracle.hall_number(generic, mu, nu, 2) > 0,
                 [&] { return "no extension of type " + format(generic); });
      for (const auto& sigma : partitions_of(static_cast<int>(n))) {
        if (oracle.hall_number(sigma, mu, nu, 2) == 0) continue;
        rec.expect(leq_deg(generic, sigma) && leq_deg(sigma, direct_sum(mu, nu)) &&
                       check_extension_bound(sigma, mu, nu),
                   [&] { return format(sigma) + " from " + format(mu) + " " + format(nu); });
      }
    }
  }
  return rec.take();
}

/// zeta * moebius = identity for every weight up to max_weight.
inline CheckReport verify_moebius(int max_weight) {
  detail::Recorder rec("moebius inversion");
  for (int n = 0; n <= max_weight; ++n) {
    const auto poset = build_poset(n);
    for (std::size_t i = 0; i < poset.size(); ++i) {
      for (std::size_t j = 0; j < poset.size(); ++j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < poset.size(); ++k) {
          s += poset.moebius(i, k) * (poset.zeta(k, j) ? 1 : 0);
        }
        rec.expect(s == (i == j ? 1 : 0), [&] { return "weight " + std::to_string(n); });
      }
    }
  }
  return rec.take();
}

inline std::vector<CheckReport> verify_all(int max_weight) {
  return {verify_moebius(max_weight), verify_homomorphism_law(max_weight),
          verify_column_products(max_weight), verify_extension_extremes(max_weight),
          verify_oracle_agreement(max_weight)};
}

}  // namespace hallzero
