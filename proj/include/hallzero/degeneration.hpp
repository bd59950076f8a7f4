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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace hallzero {

inline constexpr int kDefaultWeightCap = 30;

/// Degeneration order on nilpotent modules of equal dimension:
/// M(lambda) <=_deg M(nu) iff every prefix sum of conjugate(lambda) is
/// bounded by the matching prefix sum of conjugate(nu).
inline bool leq_deg(const Partition& lambda, const Partition& nu) {
  if (lambda.weight() != nu.weight()) {
    throw std::invalid_argument("leq_deg: weights differ (" + format(lambda) + " vs " +
                                format(nu) + ")");
  }
  const Partition a = conjugate(lambda);
  const Partition b = conjugate(nu);
  const std::size_t len = std::max(a.length(), b.length());
  std::int64_t sa = 0;
  std::int64_t sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

/// All partitions of n in descending lexicographic order.
inline std::vector<Partition> partitions_of(int n, int cap = kDefaultWeightCap) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  if (n > cap) {
    throw CapExceeded("partitions_of: weight " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<Partition> out;
  std::vector<std::int64_t> current;
  auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition::make(current));
      return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// The partitions of one weight under <=_deg, with the zeta matrix and its
/// exact integer inverse. Elements are listed in descending lexicographic
/// order, which is checked to be a linear extension, so both matrices are
/// upper unitriangular.
class DegPoset {
 public:
  using Row = std::vector<std::uint64_t>;

  /// Builds from an element list and precomputed zeta rows (e.g. from the
  /// disk cache). Checks the element list and triangularity, then recomputes
  /// the Moebius matrix.
  DegPoset(int n, std::vector<Partition> elements, std::vector<Row> zeta)
      : n_(n), elements_(std::move(elements)), zeta_(std::move(zeta)) {
    validate();
    compute_moebius();
  }

  int weight() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Partition>& elements() const noexcept { return elements_; }
  const Partition& element(std::size_t i) const { return elements_.at(i); }

  std::size_t index_of(const Partition& lambda) const {
    auto it = index_.find(lambda);
    if (it == index_.end()) {
      throw std::invalid_argument("partition " + format(lambda) + " is not of weight " +
                                  std::to_string(n_));
    }
    return it->second;
  }

  bool zeta(std::size_t i, std::size_t j) const noexcept {
    return (zeta_[i][j / 64] >> (j % 64)) & 1U;
  }
  const Row& zeta_row(std::size_t i) const { return zeta_.at(i); }

  /// Nonzero entries of row i of the Moebius matrix, by increasing column.
  const std::vector<std::pair<std::size_t, std::int64_t>>& moebius_row(std::size_t i) const {
    return moebius_.at(i);
  }

  std::int64_t moebius(std::size_t i, std::size_t j) const {
    const auto& row = moebius_.at(i);
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == j) ? it->second : 0;
  }

  bool leq(const Partition& lambda, const Partition& nu) const {
    return zeta(index_of(lambda), index_of(nu));
  }

  /// Indices j with i <=_deg j, increasing.
  std::vector<std::size_t> up_indices(std::size_t i) const {
    std::vector<std::size_t> out;
    const Row& row = zeta_.at(i);
    for (std::size_t w = 0; w < row.size(); ++w) {
      std::uint64_t bits = row[w];
      while (bits != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

 private:
  void validate() {
    const auto expected = partitions_of(n_, std::max(n_, kDefaultWeightCap));
    if (expected != elements_) {
      throw ConsistencyError("DegPoset: element list is not the canonical enumeration of weight " +
                             std::to_string(n_));
    }
    const std::size_t words = (elements_.size() + 63) / 64;
    if (zeta_.size() != elements_.size()) {
      throw ConsistencyError("DegPoset: zeta has wrong number of rows");
    }
    for (std::size_t i = 0; i < zeta_.size(); ++i) {
      if (zeta_[i].size() != words) throw ConsistencyError("DegPoset: zeta row has wrong width");
      if (!zeta(i, i)) throw ConsistencyError("DegPoset: zeta diagonal is not 1");
      for (std::size_t j = 0; j < i; ++j) {
        if (zeta(i, j)) {
          throw ConsistencyError("DegPoset: descending lexicographic order is not a linear "
                                 "extension at " + format(elements_[i]) + " <= " +
                                 format(elements_[j]));
        }
      }
      // unused high bits must be clear
      if (elements_.size() % 64 != 0 &&
          (zeta_[i].back() >> (elements_.size() % 64)) != 0) {
        throw ConsistencyError("DegPoset: zeta row has stray bits");
      }
    }
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  }

  // Unitriangular back-substitution, one row at a time:
  // M[i][j] = -sum_{i <= k < j} M[i][k] Z[k][j].
  void compute_moebius() {
    const std::size_t size = elements_.size();
    moebius_.assign(size, {});
    for (std::size_t i = 0; i < size; ++i) {
      auto& row = moebius_[i];
      row.emplace_back(i, 1);
      for (std::size_t j : up_indices(i)) {
        if (j == i) continue;
        std::int64_t acc = 0;
        for (const auto& [k, m] : row) {
          if (zeta(k, j) && __builtin_add_overflow(acc, m, &acc)) {
            throw std::overflow_error("DegPoset: Moebius entry overflows 64 bits");
          }
        }
        if (acc != 0) row.emplace_back(j, -acc);
      }
    }
  }

  int n_;
  std::vector<Partition> elements_;
  std::vector<Row> zeta_;
  std::unordered_map<Partition, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> moebius_;
};

/// Builds the degeneration poset of weight n by pairwise comparison.
inline DegPoset build_poset(int n, int cap = kDefaultWeightCap) {
  auto elements = partitions_of(n, cap);
  const std::size_t size = elements.size();
  const std::size_t words = (size + 63) / 64;

  // Prefix sums of conjugates, computed once per element.
  std::vector<std::vector<std::int64_t>> prefix(size);
  for (std::size_t i = 0; i < size; ++i) {
    const Partition c = conjugate(elements[i]);
    std::int64_t s = 0;
    for (auto v : c.parts()) prefix[i].push_back(s += v);
  }
  auto leq = [&](std::size_t a, std::size_t b) {
    const auto& pa = prefix[a];
    const auto& pb = prefix[b];
    const std::size_t len = std::max(pa.size(), pb.size());
    for (std::size_t m = 0; m < len; ++m) {
      const std::int64_t x = m < pa.size() ? pa[m] : n;
      const std::int64_t y = m < pb.size() ? pb[m] : n;
      if (x > y) return false;
    }
    return true;
  };

  std::vector<DegPoset::Row> zeta(size, DegPoset::Row(words, 0));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (leq(i, j)) zeta[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  return DegPoset(n, std::move(elements), std::move(zeta));
}

/// { nu : lambda <=_deg nu }, in descending lexicographic order.
inline std::vector<Partition> up_set(const Partition& lambda) {
  std::vector<Partition> out;
  const auto n = static_cast<int>(lambda.weight());
  for (auto& nu : partitions_of(n, std::max(n, kDefaultWeightCap))) {
    if (leq_deg(lambda, nu)) out.push_back(std::move(nu));
  }
  return out;
}

/// Covering pairs (lambda, nu): lambda <_deg nu with nothing strictly between.
inline std::vector<std::pair<Partition, Partition>> hasse_edges(const DegPoset& poset) {
  std::vector<std::pair<Partition, Partition>> out;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto ups = poset.up_indices(i);
    for (std::size_t j : ups) {
      if (j == i) continue;
      const bool covered = std::none_of(ups.begin(), ups.end(), [&](std::size_t k) {
        return k != i && k != j && poset.zeta(k, j);
      });
      if (covered) out.emplace_back(poset.element(i), poset.element(j));
    }
  }
  return out;
}

/// Graphviz rendering of the Hasse diagram; edges point upward in the
/// order, so the single-block module (n) sits at the top.
inline std::string to_dot(const DegPoset& poset) {
  std::string out = "digraph deg_order_" + std::to_string(poset.weight()) + " {\n";
  out += "  rankdir=TB;\n";
  for (const auto& p : poset.elements()) out += "  \"" + format(p) + "\";\n";
  for (const auto& [a, b] : hasse_edges(poset)) {
    out += "  \"" + format(a) + "\" -> \"" + format(b) + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hallzero
