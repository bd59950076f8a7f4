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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "prime_field.hpp"

namespace hallzero {

/// Largest ambient dimension the dense row type can hold.
inline constexpr std::size_t kMaxDim = 12;

using Vec = std::array<PrimeField::Elem, kMaxDim>;

/// Dense square matrix; entries are reduced mod p on use.
using Matrix = std::vector<std::vector<int>>;

/// Weight caps for brute-force enumeration.
struct OracleCaps {
  int small_prime_weight = 8;  // p = 2, 3
  int large_prime_weight = 6;  // p >= 5
  // Invariant subspaces one histogram may visit before giving up.
  std::uint64_t max_subspaces = 20'000'000;

  int weight_cap(int p) const noexcept { return p <= 3 ? small_prime_weight : large_prime_weight; }

  void check(std::int64_t n, int p) const {
    if (n > weight_cap(p) || n > static_cast<std::int64_t>(kMaxDim)) {
      throw CapExceeded("oracle: dimension " + std::to_string(n) + " exceeds cap " +
                        std::to_string(weight_cap(p)) + " for p = " + std::to_string(p));
    }
  }
};

/// Rank of the given rows (first ncols coordinates) over F_p.
inline std::size_t rank_mod_p(std::span<const Vec> rows, std::size_t ncols, const PrimeField& field) {
  std::array<Vec, kMaxDim * 2> m{};
  const std::size_t nrows = rows.size();
  std::vector<Vec> heap;
  Vec* a = m.data();
  if (nrows > m.size()) {
    heap.assign(rows.begin(), rows.end());
    a = heap.data();
  } else {
    std::copy(rows.begin(), rows.end(), m.begin());
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && a[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(a[pivot], a[rank]);
    const auto inv = field.inv(a[rank][col]);
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      if (a[r][col] == 0) continue;
      const auto f = field.mul(a[r][col], inv);
      for (std::size_t c = col; c < ncols; ++c) {
        a[r][c] = field.sub(a[r][c], field.mul(f, a[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

/// Jordan type from kernel dimensions: kernel_dims[i] = dim ker T^(i+1) on a
/// space of dimension `dim`. The conjugate of the type has parts
/// dim ker T^i - dim ker T^(i-1).
inline Partition jordan_type_from_kernel_dims(std::span<const std::int64_t> kernel_dims,
                                              std::int64_t dim) {
  if (dim == 0) return Partition();
  std::vector<std::int64_t> jumps;
  std::int64_t prev = 0;
  for (std::int64_t kd : kernel_dims) {
    if (kd < prev || kd > dim) throw ConsistencyError("kernel dimensions are not monotone");
    if (kd == prev) break;
    jumps.push_back(kd - prev);
    prev = kd;
    if (kd == dim) break;
  }
  if (prev != dim) throw std::invalid_argument("operator is not nilpotent");
  try {
    return conjugate(Partition::make(jumps));
  } catch (const std::invalid_argument&) {
    throw ConsistencyError("kernel dimension increments are not weakly decreasing");
  }
}

/// Jordan type of a nilpotent square matrix over F_p. Rejects operators with
/// A^dim != 0.
inline Partition jordan_type(const Matrix& a, const PrimeField& field) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("jordan_type: matrix is not square");
  }
  if (n == 0) return Partition();
  if (n > kMaxDim) throw CapExceeded("jordan_type: dimension exceeds " + std::to_string(kMaxDim));
  const int p = field.p();
  auto reduce = [p](long long v) { return static_cast<int>(((v % p) + p) % p); };

  std::vector<std::vector<int>> power(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) power[i][j] = reduce(a[i][j]);
  }
  std::vector<std::int64_t> kernel_dims;
  for (std::size_t step = 1; step <= n; ++step) {
    std::vector<Vec> rows(n, Vec{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = static_cast<PrimeField::Elem>(power[i][j]);
    }
    const auto r = rank_mod_p(rows, n, field);
    kernel_dims.push_back(static_cast<std::int64_t>(n - r));
    if (r == 0) break;
    std::vector<std::vector<int>> next(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (power[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          next[i][j] = (next[i][j] + power[i][k] * reduce(a[k][j])) % p;
        }
      }
    }
    power = std::move(next);
  }
  return jordan_type_from_kernel_dims(kernel_dims, static_cast<std::int64_t>(n));
}

/// M(gamma) over F_p: the space F_p^n, n = |gamma|, with T acting on the
/// standard basis as e_j -> e_(j+1) inside each Jordan block and killing the
/// last vector of every block. T maps span(e_c, ..., e_n) into
/// span(e_(c+1), ..., e_n).
class JordanModule {
 public:
  JordanModule(Partition type, PrimeField field, const OracleCaps& caps = {})
      : type_(std::move(type)), field_(field) {
    caps.check(type_.weight(), field_.p());
    dim_ = static_cast<std::size_t>(type_.weight());
    std::size_t start = 0;
    for (auto block : type_.parts()) {
      for (std::size_t i = 0; i < static_cast<std::size_t>(block); ++i) {
        depth_[start + i] = i;
        has_next_[start + i] = i + 1 < static_cast<std::size_t>(block);
      }
      start += static_cast<std::size_t>(block);
    }
  }

  const Partition& type() const noexcept { return type_; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  /// Position of basis vector j inside its block; e_j lies in T^depth V.
  std::size_t depth(std::size_t j) const noexcept { return depth_[j]; }

  Vec apply(const Vec& v) const noexcept {
    Vec out{};
    for (std::size_t j = 0; j < dim_; ++j) {
      if (has_next_[j]) out[j + 1] = v[j];
    }
    return out;
  }

  /// T as a matrix: entry (i, j) is the e_i coordinate of T e_j.
  Matrix matrix() const {
    Matrix m(dim_, std::vector<int>(dim_, 0));
    for (std::size_t j = 0; j < dim_; ++j) {
      if (has_next_[j]) m[j + 1][j] = 1;
    }
    return m;
  }

 private:
  Partition type_;
  PrimeField field_;
  std::size_t dim_ = 0;
  std::array<std::size_t, kMaxDim> depth_{};
  std::array<bool, kMaxDim> has_next_{};
};

/// A subspace of F_p^n given by its reduced row-echelon basis.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;

  std::size_t dim() const noexcept { return basis.size(); }
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

namespace detail {

// Enumerates k-dimensional subspaces of F_p^n as reduced echelon bases,
// filling rows from the bottom (largest pivot) up. After row r is chosen,
// accept(rows, pivots, r) may prune: rows r..k-1 span the intersection of
// the subspace with span(e_(pivot r), ..., e_n).
template <class Accept, class Visit>
void enumerate_rref(std::size_t n, std::size_t k, const PrimeField& field, Accept&& accept,
                    Visit&& visit) {
  if (k > n) return;
  std::array<Vec, kMaxDim> rows{};
  std::array<std::size_t, kMaxDim> pivots{};
  if (k == 0) {
    visit(std::span<const Vec>(rows.data(), 0), std::span<const std::size_t>(pivots.data(), 0));
    return;
  }
  const auto p = static_cast<PrimeField::Elem>(field.p());
  std::array<std::size_t, kMaxDim> free_cols{};

  auto rec = [&](auto&& self, std::size_t r) -> void {
    const std::size_t upper = (r + 1 == k) ? n : pivots[r + 1];
    for (std::size_t c = r; c < upper; ++c) {
      pivots[r] = c;
      std::size_t nfree = 0;
      for (std::size_t j = c + 1, s = r + 1; j < n; ++j) {
        if (s < k && pivots[s] == j) {
          ++s;
          continue;
        }
        free_cols[nfree++] = j;
      }
      Vec& row = rows[r];
      row.fill(0);
      row[c] = 1;
      const std::array<std::size_t, kMaxDim> my_free = free_cols;
      while (true) {
        if (accept(std::span<const Vec>(rows.data(), k), std::span<const std::size_t>(pivots.data(), k), r)) {
          if (r == 0) {
            visit(std::span<const Vec>(rows.data(), k), std::span<const std::size_t>(pivots.data(), k));
          } else {
            self(self, r - 1);
          }
        }
        // odometer over the free entries
        std::size_t i = 0;
        while (i < nfree) {
          auto& e = row[my_free[i]];
          if (++e < p) break;
          e = 0;
          ++i;
        }
        if (i == nfree) break;
      }
    }
  };
  rec(rec, k - 1);
}

// Invariant subspaces of dimension k as reduced echelon bases, bottom row
// first. Invariance of row r (T row_r in the span of the rows below) is
// affine in the row's free entries, so the admissible rows are the
// solutions of a small linear system rather than a filtered odometer.
template <class Visit>
void enumerate_invariant_rref(const JordanModule& m, std::size_t k, Visit&& visit) {
  const std::size_t n = m.dim();
  if (k > n) return;
  std::array<Vec, kMaxDim> rows{};
  std::array<std::size_t, kMaxDim> pivots{};
  if (k == 0) {
    visit(std::span<const Vec>(rows.data(), 0), std::span<const std::size_t>(pivots.data(), 0));
    return;
  }
  const PrimeField& f = m.field();
  const auto p = static_cast<PrimeField::Elem>(f.p());

  // T v reduced against rows r+1..k-1.
  auto residual = [&](Vec v, std::size_t r) {
    v = m.apply(v);
    for (std::size_t s = r + 1; s < k; ++s) {
      const auto coef = v[pivots[s]];
      if (coef == 0) continue;
      for (std::size_t j = pivots[s]; j < n; ++j) v[j] = f.sub(v[j], f.mul(coef, rows[s][j]));
    }
    return v;
  };

  auto rec = [&](auto&& self, std::size_t r) -> void {
    const std::size_t upper = (r + 1 == k) ? n : pivots[r + 1];
    for (std::size_t c = r; c < upper; ++c) {
      pivots[r] = c;
      std::array<std::size_t, kMaxDim> free_cols{};
      std::size_t nfree = 0;
      for (std::size_t j = c + 1, s = r + 1; j < n; ++j) {
        if (s < k && pivots[s] == j) {
          ++s;
          continue;
        }
        free_cols[nfree++] = j;
      }

      // Augmented system: column i <-> free_cols[i], last column -residual(e_c).
      std::array<std::array<PrimeField::Elem, kMaxDim + 1>, kMaxDim> sys{};
      Vec unit{};
      unit[c] = 1;
      const Vec rhs = residual(unit, r);
      for (std::size_t i = 0; i < nfree; ++i) {
        Vec e{};
        e[free_cols[i]] = 1;
        const Vec a = residual(e, r);
        for (std::size_t eq = 0; eq < n; ++eq) sys[eq][i] = a[eq];
      }
      for (std::size_t eq = 0; eq < n; ++eq) sys[eq][nfree] = f.neg(rhs[eq]);

      std::array<std::size_t, kMaxDim> lead{};
      std::array<bool, kMaxDim> is_lead{};
      std::size_t rank = 0;
      for (std::size_t col = 0; col < nfree && rank < n; ++col) {
        std::size_t sel = rank;
        while (sel < n && sys[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(sys[sel], sys[rank]);
        const auto inv = f.inv(sys[rank][col]);
        for (std::size_t j = col; j <= nfree; ++j) sys[rank][j] = f.mul(sys[rank][j], inv);
        for (std::size_t other = 0; other < n; ++other) {
          const auto coef = sys[other][col];
          if (other == rank || coef == 0) continue;
          for (std::size_t j = col; j <= nfree; ++j) {
            sys[other][j] = f.sub(sys[other][j], f.mul(coef, sys[rank][j]));
          }
        }
        lead[rank] = col;
        is_lead[col] = true;
        ++rank;
      }
      bool consistent = true;
      for (std::size_t eq = rank; eq < n; ++eq) consistent = consistent && sys[eq][nfree] == 0;
      if (!consistent) continue;

      std::array<std::size_t, kMaxDim> params{};
      std::size_t nparams = 0;
      for (std::size_t col = 0; col < nfree; ++col) {
        if (!is_lead[col]) params[nparams++] = col;
      }
      std::array<PrimeField::Elem, kMaxDim> t{};
      while (true) {
        Vec& row = rows[r];
        row.fill(0);
        row[c] = 1;
        for (std::size_t i = 0; i < nparams; ++i) row[free_cols[params[i]]] = t[i];
        for (std::size_t i = 0; i < rank; ++i) {
          auto x = sys[i][nfree];
          for (std::size_t q = 0; q < nparams; ++q) x = f.sub(x, f.mul(sys[i][params[q]], t[q]));
          row[free_cols[lead[i]]] = x;
        }
        if (r == 0) {
          visit(std::span<const Vec>(rows.data(), k), std::span<const std::size_t>(pivots.data(), k));
        } else {
          self(self, r - 1);
        }
        std::size_t i = 0;
        while (i < nparams) {
          if (++t[i] < p) break;
          t[i] = 0;
          ++i;
        }
        if (i == nparams) break;
      }
    }
  };
  rec(rec, k - 1);
}

}  // namespace detail

/// Jordan type of T restricted to the invariant subspace spanned by `rows`.
inline Partition submodule_type(const JordanModule& m, std::span<const Vec> rows) {
  const std::size_t k = rows.size();
  if (k == 0) return Partition();
  std::array<Vec, kMaxDim> cur{};
  std::copy(rows.begin(), rows.end(), cur.begin());
  std::vector<std::int64_t> kernel_dims;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t r = 0; r < k; ++r) cur[r] = m.apply(cur[r]);
    const auto rank = rank_mod_p(std::span<const Vec>(cur.data(), k), m.dim(), m.field());
    kernel_dims.push_back(static_cast<std::int64_t>(k - rank));
    if (rank == 0) break;
  }
  return jordan_type_from_kernel_dims(kernel_dims, static_cast<std::int64_t>(k));
}

/// Jordan type of the map induced by T on V/U, U spanned by `rows`.
/// dim ker(T^i on V/U) = n - dim(T^i V + U), and T^i V is spanned by the
/// basis vectors of depth >= i.
inline Partition quotient_type(const JordanModule& m, std::span<const Vec> rows) {
  const std::size_t n = m.dim();
  const std::size_t k = rows.size();
  const std::size_t q = n - k;
  if (q == 0) return Partition();
  std::array<Vec, kMaxDim> cut{};
  std::vector<std::int64_t> kernel_dims;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t image_dim = 0;
    for (std::size_t j = 0; j < n; ++j) image_dim += m.depth(j) >= i ? 1 : 0;
    for (std::size_t r = 0; r < k; ++r) {
      cut[r] = rows[r];
      for (std::size_t j = 0; j < n; ++j) {
        if (m.depth(j) >= i) cut[r][j] = 0;
      }
    }
    const auto sum_dim = image_dim + rank_mod_p(std::span<const Vec>(cut.data(), k), n, m.field());
    const auto kd = static_cast<std::int64_t>(n - sum_dim);
    kernel_dims.push_back(kd);
    if (kd == static_cast<std::int64_t>(q)) break;
  }
  return jordan_type_from_kernel_dims(kernel_dims, static_cast<std::int64_t>(q));
}

/// Calls f(const Subspace&) once for every T-invariant subspace of the
/// given dimension. Enumeration order is unspecified.
template <class F>
void for_each_invariant_subspace(const JordanModule& m, std::size_t dim, F&& f) {
  detail::enumerate_invariant_rref(
      m, dim, [&](std::span<const Vec> rows, std::span<const std::size_t> pivots) {
        f(Subspace{m.dim(), std::vector<Vec>(rows.begin(), rows.end()),
                   std::vector<std::size_t>(pivots.begin(), pivots.end())});
      });
}

/// Every T-invariant subspace of M, each exactly once.
inline std::vector<Subspace> enumerate_invariant_subspaces(const JordanModule& m) {
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= m.dim(); ++k) {
    for_each_invariant_subspace(m, k, [&](const Subspace& s) { out.push_back(s); });
  }
  return out;
}

/// Number of subspaces of F_p^n, by enumerating reduced echelon bases.
inline std::uint64_t count_all_subspaces(std::size_t n, int p, const OracleCaps& caps = {}) {
  const PrimeField field(p);
  caps.check(static_cast<std::int64_t>(n), p);
  std::uint64_t count = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    detail::enumerate_rref(
        n, k, field, [](auto, auto, std::size_t) { return true; },
        [&](auto, auto) { ++count; });
  }
  return count;
}

/// Brute-force Hall numbers with memoized (type, cotype) histograms per
/// (gamma, p, submodule dimension). Safe to share between threads.
class HallOracle {
 public:
  using Histogram = std::map<std::pair<Partition, Partition>, std::uint64_t>;

  explicit HallOracle(OracleCaps caps = {}) : caps_(caps) {}

  const OracleCaps& caps() const noexcept { return caps_; }

  /// Number of invariant subspaces of M(gamma) over F_p of dimension dim,
  /// keyed by (submodule type, quotient type).
  std::shared_ptr<const Histogram> histogram(const Partition& gamma, int p, std::size_t dim) {
    const auto key = std::make_tuple(gamma, p, dim);
    auto over_budget = [&] {
      return CapExceeded("oracle: more than " + std::to_string(caps_.max_subspaces) +
                         " invariant subspaces of dimension " + std::to_string(dim) + " in M" +
                         format(gamma) + " over F_" + std::to_string(p));
    };
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) {
        if (!it->second) throw over_budget();
        return it->second;
      }
    }
    const JordanModule m(gamma, PrimeField(p), caps_);
    auto hist = std::make_shared<Histogram>();
    std::uint64_t visited = 0;
    try {
      detail::enumerate_invariant_rref(m, dim, [&](std::span<const Vec> rows, auto) {
            if (++visited > caps_.max_subspaces) throw over_budget();
            ++(*hist)[{submodule_type(m, rows), quotient_type(m, rows)}];
          });
    } catch (const CapExceeded&) {
      std::lock_guard lock(mutex_);
      cache_.emplace(key, nullptr);
      throw;
    }
    std::lock_guard lock(mutex_);
    return cache_.emplace(key, std::move(hist)).first->second;
  }

  /// F^gamma_{alpha beta}(F_p): submodules U of M(gamma) with U of type
  /// beta and M(gamma)/U of type alpha.
  std::uint64_t hall_number(const Partition& gamma, const Partition& alpha, const Partition& beta,
                            int p) {
    const PrimeField field(p);
    if (alpha.weight() + beta.weight() != gamma.weight()) return 0;
    caps_.check(gamma.weight(), p);
    const auto hist = histogram(gamma, p, static_cast<std::size_t>(beta.weight()));
    auto it = hist->find({beta, alpha});
    return it == hist->end() ? 0 : it->second;
  }

  std::uint64_t count_invariant_subspaces(const Partition& gamma, int p) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(gamma.weight()); ++k) {
      for (const auto& [types, count] : *histogram(gamma, p, k)) total += count;
    }
    return total;
  }

 private:
  OracleCaps caps_;
  std::mutex mutex_;
  std::map<std::tuple<Partition, int, std::size_t>, std::shared_ptr<const Histogram>> cache_;
};

inline HallOracle& shared_oracle() {
  static HallOracle oracle;
  return oracle;
}

inline std::uint64_t hall_number(const Partition& gamma, const Partition& alpha,
                                 const Partition& beta, int p) {
  return shared_oracle().hall_number(gamma, alpha, beta, p);
}

}  // namespace hallzero
