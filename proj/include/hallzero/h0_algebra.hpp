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
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "degeneration.hpp"
#include "partition.hpp"
#include "poset_cache.hpp"

namespace hallzero {

using Integer = boost::multiprecision::cpp_int;

/// Total order used wherever partitions of mixed weight are listed:
/// weight ascending, then descending lexicographic (the poset order).
struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const {
    const auto wa = a.weight();
    const auto wb = b.weight();
    if (wa != wb) return wa < wb;
    return b < a;
  }
};

/// Integer linear combination of basis symbols u_lambda of the degenerate
/// Hall algebra. Zero coefficients are never stored.
///
/// The same container also holds coordinates in the basis {F(M(beta))}
/// when returned from f_inverse.
class H0Element {
 public:
  using Terms = std::map<Partition, Integer, CanonicalLess>;

  H0Element() = default;

  static H0Element basis(const Partition& lambda) {
    H0Element x;
    x.terms_.emplace(lambda, 1);
    return x;
  }

  /// The unit u_0.
  static H0Element one() { return basis(Partition()); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Partition& lambda, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  H0Element& operator+=(const H0Element& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
  }

  H0Element& operator-=(const H0Element& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
  }

  H0Element& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [p, c] : terms_) c *= s;
    }
    return *this;
  }

  friend H0Element operator+(H0Element a, const H0Element& b) { return a += b; }
  friend H0Element operator-(H0Element a, const H0Element& b) { return a -= b; }
  friend H0Element operator*(H0Element a, const Integer& s) { return a *= s; }
  friend bool operator==(const H0Element& a, const H0Element& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Text form such as "u(4,1) - u(3,1^2)"; "0" for the zero element.
inline std::string format(const H0Element& x, const std::string& symbol = "u") {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : x.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + "*";
    out += symbol + format(p);
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const H0Element& x) { return os << format(x); }

/// F(M(alpha)) = sum of u_beta over all beta with M(alpha) <=_deg M(beta).
inline H0Element f_map(const Partition& alpha, PosetCache& posets = shared_posets()) {
  const auto poset = posets.get(static_cast<int>(alpha.weight()));
  H0Element x;
  for (std::size_t j : poset->up_indices(poset->index_of(alpha))) x.add_term(poset->element(j), 1);
  return x;
}

/// Coordinates of x in the basis {F(M(beta))}:
/// u_alpha = sum_beta moebius[alpha][beta] F(M(beta)).
inline H0Element f_inverse(const H0Element& x, PosetCache& posets = shared_posets()) {
  H0Element out;
  for (const auto& [alpha, c] : x.terms()) {
    const auto poset = posets.get(static_cast<int>(alpha.weight()));
    for (const auto& [j, m] : poset->moebius_row(poset->index_of(alpha))) {
      out.add_term(poset->element(j), c * m);
    }
  }
  return out;
}

/// u_alpha u_beta, expanded in the u-basis. Uses
///   u_alpha u_beta = sum_{sigma,tau} mu[alpha][sigma] mu[beta][tau] F(M(sigma + tau))
/// which follows from F being multiplicative and F(M(s)) F(M(t)) = F(M(s + t)).
inline H0Element basis_product(const Partition& alpha, const Partition& beta,
                               PosetCache& posets = shared_posets()) {
  const auto pa = posets.get(static_cast<int>(alpha.weight()));
  const auto pb = posets.get(static_cast<int>(beta.weight()));
  const auto pg = posets.get(static_cast<int>(alpha.weight() + beta.weight()));

  // Coefficient of F(M(g)) in the product, indexed by g in pg.
  std::map<std::size_t, Integer> f_coeffs;
  for (const auto& [s, ms] : pa->moebius_row(pa->index_of(alpha))) {
    for (const auto& [t, mt] : pb->moebius_row(pb->index_of(beta))) {
      const std::size_t g = pg->index_of(add(pa->element(s), pb->element(t)));
      f_coeffs[g] += Integer(ms) * mt;
    }
  }
  H0Element out;
  for (const auto& [g, c] : f_coeffs) {
    if (c == 0) continue;
    for (std::size_t j : pg->up_indices(g)) out.add_term(pg->element(j), c);
  }
  return out;
}

/// Constant term phi^gamma_{alpha beta}(0) of the Hall polynomial, i.e. the
/// structure constant of u_alpha u_beta at u_gamma. Zero when the weights
/// do not add up.
inline Integer constant_term(const Partition& alpha, const Partition& beta, const Partition& gamma,
                             PosetCache& posets = shared_posets()) {
  if (alpha.weight() + beta.weight() != gamma.weight()) return 0;
  const auto pa = posets.get(static_cast<int>(alpha.weight()));
  const auto pb = posets.get(static_cast<int>(beta.weight()));
  const auto pg = posets.get(static_cast<int>(gamma.weight()));
  const std::size_t target = pg->index_of(gamma);
  Integer sum = 0;
  for (const auto& [s, ms] : pa->moebius_row(pa->index_of(alpha))) {
    for (const auto& [t, mt] : pb->moebius_row(pb->index_of(beta))) {
      const std::size_t g = pg->index_of(add(pa->element(s), pb->element(t)));
      if (pg->zeta(g, target)) sum += Integer(ms) * mt;
    }
  }
  return sum;
}

/// Bilinear extension of basis_product.
inline H0Element h0_multiply(const H0Element& x, const H0Element& y,
                             PosetCache& posets = shared_posets()) {
  H0Element out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      out += basis_product(a, b, posets) * Integer(ca * cb);
    }
  }
  return out;
}

}  // namespace hallzero
