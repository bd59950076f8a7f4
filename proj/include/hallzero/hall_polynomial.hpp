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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "h0_algebra.hpp"
#include "hall_oracle.hpp"
#include "partition.hpp"
#include "prime_field.hpp"

namespace hallzero {

using Rational = boost::multiprecision::cpp_rational;

/// n(lambda) = sum_i (i - 1) lambda_i.
inline std::int64_t n_stat(const Partition& lambda) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) s += static_cast<std::int64_t>(i) * lambda[i];
  return s;
}

/// Univariate polynomial with integer coefficients, constant term first,
/// without trailing zero coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  Integer evaluate(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Ascending text form, e.g. "-1 + 0·t + 1·t^2"; "0" for the zero polynomial.
inline std::string format(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Integer& c = f.coeffs()[i];
    if (i == 0) {
      out += c.str();
    } else {
      out += c < 0 ? " - " : " + ";
      out += (c < 0 ? Integer(-c) : c).str();
    }
    if (i == 1) out += "·t";
    if (i > 1) out += "·t^" + std::to_string(i);
  }
  return out;
}

/// Coefficients of the unique polynomial of degree < xs.size() through the
/// points (xs[i], ys[i]), in exact rational arithmetic.
inline std::vector<Rational> lagrange_coefficients(const std::vector<Integer>& xs,
                                                   const std::vector<Integer>& ys) {
  const std::size_t m = xs.size();
  std::vector<Rational> result(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    for (std::size_t d = 0; d < basis.size(); ++d) result[d] += Rational(ys[i]) * basis[d] / denom;
  }
  return result;
}

/// Hall polynomial together with the oracle samples it was fitted to.
struct HallPolyFit {
  IntPoly poly;
  std::int64_t degree_budget = 0;
  std::vector<std::pair<int, std::uint64_t>> samples;  // fitted points
  std::pair<int, std::uint64_t> validation{0, 0};       // extra checked point
};

/// Primes from the supported list whose oracle cap admits weight n.
inline std::vector<int> admissible_primes(std::int64_t n, const OracleCaps& caps) {
  std::vector<int> out;
  for (int p : PrimeField::kSupported) {
    if (n <= caps.weight_cap(p) && n <= static_cast<std::int64_t>(kMaxDim)) out.push_back(p);
  }
  return out;
}

/// Number of sample primes an interpolation needs, or 0 if the weights do
/// not add up.
inline std::size_t required_samples(const Partition& alpha, const Partition& beta,
                                    const Partition& gamma) {
  const std::int64_t d = n_stat(gamma) - n_stat(alpha) - n_stat(beta);
  return d < 0 ? 2 : static_cast<std::size_t>(d + 2);
}

inline bool interpolation_feasible(const Partition& alpha, const Partition& beta,
                                   const Partition& gamma, const OracleCaps& caps = {}) {
  if (alpha.weight() + beta.weight() != gamma.weight()) return false;
  return required_samples(alpha, beta, gamma) <= admissible_primes(gamma.weight(), caps).size();
}

/// Recovers phi^gamma_{alpha beta} from oracle counts at the smallest
/// admissible primes. The degree budget n(gamma) - n(alpha) - n(beta)
/// fixes how many points are fitted; one further prime is always checked.
inline HallPolyFit interpolate_hall_poly_fit(const Partition& alpha, const Partition& beta,
                                             const Partition& gamma,
                                             HallOracle& oracle = shared_oracle()) {
  if (alpha.weight() + beta.weight() != gamma.weight()) {
    throw std::invalid_argument("interpolate_hall_poly: |" + format(alpha) + "| + |" +
                                format(beta) + "| != |" + format(gamma) + "|");
  }
  HallPolyFit fit;
  fit.degree_budget = n_stat(gamma) - n_stat(alpha) - n_stat(beta);
  const auto primes = admissible_primes(gamma.weight(), oracle.caps());
  const std::size_t needed = required_samples(alpha, beta, gamma);
  if (needed > primes.size()) {
    throw Infeasible("interpolate_hall_poly: infeasible at desk scale (" + std::to_string(needed) +
                     " sample primes needed, " + std::to_string(primes.size()) + " admissible)");
  }

  auto count_at = [&](int p) {
    try {
      return oracle.hall_number(gamma, alpha, beta, p);
    } catch (const Infeasible&) {
      throw;
    } catch (const CapExceeded& e) {
      throw Infeasible(std::string("interpolate_hall_poly: infeasible at desk scale (") + e.what() + ")");
    }
  };

  if (fit.degree_budget < 0) {
    // Only the zero polynomial fits a negative degree budget.
    for (std::size_t i = 0; i < needed; ++i) {
      const auto c = count_at(primes[i]);
      if (c != 0) {
        throw ConsistencyError("interpolate_hall_poly: negative degree budget but count " +
                               std::to_string(c) + " at p = " + std::to_string(primes[i]));
      }
      if (i + 1 < needed) {
        fit.samples.emplace_back(primes[i], c);
      } else {
        fit.validation = {primes[i], c};
      }
    }
    return fit;
  }

  std::vector<Integer> xs;
  std::vector<Integer> ys;
  for (std::size_t i = 0; i + 1 < needed; ++i) {
    const auto c = count_at(primes[i]);
    fit.samples.emplace_back(primes[i], c);
    xs.emplace_back(primes[i]);
    ys.emplace_back(c);
  }
  std::vector<Integer> coeffs;
  for (const Rational& r : lagrange_coefficients(xs, ys)) {
    if (boost::multiprecision::denominator(r) != 1) {
      throw ConsistencyError("interpolate_hall_poly: non-integral coefficient " + r.str() +
                             " for " + format(alpha) + " " + format(beta) + " " + format(gamma));
    }
    coeffs.push_back(boost::multiprecision::numerator(r));
  }
  fit.poly = IntPoly(std::move(coeffs));

  const int check_prime = primes[needed - 1];
  const auto expected = count_at(check_prime);
  fit.validation = {check_prime, expected};
  if (fit.poly.evaluate(check_prime) != expected) {
    throw ConsistencyError("interpolate_hall_poly: polynomial " + format(fit.poly) +
                           " disagrees with oracle count " + std::to_string(expected) +
                           " at p = " + std::to_string(check_prime));
  }
  return fit;
}

inline IntPoly interpolate_hall_poly(const Partition& alpha, const Partition& beta,
                                     const Partition& gamma, HallOracle& oracle = shared_oracle()) {
  return interpolate_hall_poly_fit(alpha, beta, gamma, oracle).poly;
}

inline Integer constant_term_via_interpolation(const Partition& alpha, const Partition& beta,
                                               const Partition& gamma,
                                               HallOracle& oracle = shared_oracle()) {
  return interpolate_hall_poly(alpha, beta, gamma, oracle).coefficient(0);
}

}  // namespace hallzero
