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
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace hallzero {

/// A partition: a weakly decreasing sequence of positive integers, stored
/// without trailing zeros, so that two partitions are equal exactly when
/// their stored parts agree. The empty sequence is the zero partition.
///
/// A partition also names the isomorphism class of the nilpotent module
/// with Jordan blocks of the given sizes.
class Partition {
 public:
  using value_type = std::int32_t;

  Partition() = default;

  /// Canonical constructor. Trailing zeros are stripped; negative entries
  /// and sequences that are not weakly decreasing are rejected.
  static Partition make(std::span<const std::int64_t> parts) {
    std::vector<value_type> out;
    out.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::int64_t v = parts[i];
      if (v < 0) {
        throw std::invalid_argument("partition entry " + std::to_string(i) +
                                    " is negative");
      }
      if (v > std::numeric_limits<value_type>::max()) {
        throw std::out_of_range("partition entry " + std::to_string(i) +
                                " does not fit in 32 bits");
      }
      if (i > 0 && v > parts[i - 1]) {
        throw std::invalid_argument(
            "partition entries are not weakly decreasing at index " +
            std::to_string(i));
      }
      if (v > 0) out.push_back(static_cast<value_type>(v));
    }
    return Partition(std::move(out));
  }

  static Partition make(std::initializer_list<std::int64_t> parts) {
    return make(std::span<const std::int64_t>(parts.begin(), parts.size()));
  }

  /// Builds a partition from an arbitrary multiset of non-negative
  /// integers, sorting explicitly.
  static Partition sorted_make(std::span<const std::int64_t> parts) {
    std::vector<std::int64_t> sorted(parts.begin(), parts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return make(sorted);
  }

  static Partition sorted_make(std::initializer_list<std::int64_t> parts) {
    return sorted_make(std::span<const std::int64_t>(parts.begin(), parts.size()));
  }

  /// (n), one row.
  static Partition row(value_type n) { return n > 0 ? Partition(std::vector<value_type>{n}) : Partition(); }

  /// (1^n), one column.
  static Partition column(value_type n) {
    return Partition(std::vector<value_type>(static_cast<std::size_t>(std::max(n, 0)), 1));
  }

  const std::vector<value_type>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool is_zero() const noexcept { return parts_.empty(); }

  /// i-th part (0-based); zero past the end.
  value_type operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  value_type largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  std::int64_t weight() const noexcept {
    std::int64_t w = 0;
    for (value_type v : parts_) w += v;
    return w;
  }

  /// Multiplicity of the part value r.
  std::size_t multiplicity(value_type r) const noexcept {
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), r));
  }

  /// Lexicographic comparison of the part sequences. Enumeration order
  /// for a fixed weight is the reverse of this (descending lexicographic).
  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<value_type> parts) : parts_(std::move(parts)) {}

  std::vector<value_type> parts_;
};

inline std::int64_t weight(const Partition& lambda) noexcept { return lambda.weight(); }

/// Dual partition: the i-th part counts the parts of lambda that are >= i.
inline Partition conjugate(const Partition& lambda) {
  std::vector<std::int64_t> dual(static_cast<std::size_t>(lambda.largest()), 0);
  for (auto v : lambda.parts()) {
    for (Partition::value_type i = 0; i < v; ++i) ++dual[static_cast<std::size_t>(i)];
  }
  return Partition::make(dual);
}

/// Componentwise sum (the monoid P+).
inline Partition add(const Partition& lambda, const Partition& nu) {
  const std::size_t len = std::max(lambda.length(), nu.length());
  std::vector<std::int64_t> sum(len);
  for (std::size_t i = 0; i < len; ++i) {
    sum[i] = static_cast<std::int64_t>(lambda[i]) + nu[i];
  }
  return Partition::make(sum);
}

/// Merge of the two multisets of parts (the monoid P-union).
inline Partition unite(const Partition& lambda, const Partition& nu) {
  std::vector<std::int64_t> merged;
  merged.reserve(lambda.length() + nu.length());
  std::merge(lambda.parts().begin(), lambda.parts().end(), nu.parts().begin(),
             nu.parts().end(), std::back_inserter(merged), std::greater<>());
  return Partition::make(merged);
}

inline Partition operator+(const Partition& lambda, const Partition& nu) {
  return add(lambda, nu);
}

/// Exponent form, e.g. (3^2,2^3,1^4). The zero partition prints as ().
inline std::string format(const Partition& lambda) {
  std::string out = "(";
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
    if (j - i > 1) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  out += ')';
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
  return os << format(lambda);
}

namespace detail {

class PartitionParser {
 public:
  explicit PartitionParser(std::string_view text) : text_(text) {}

  Partition run() {
    skip_ws();
    if (at_end()) fail("empty input");
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == ')') {
        ++pos_;
      } else {
        term(true);
        skip_ws();
        while (!at_end() && peek() == ',') {
          ++pos_;
          term(true);
          skip_ws();
        }
        if (at_end()) fail("expected ')'");
        if (peek() != ')') fail("expected ',' or ')'");
        ++pos_;
      }
    } else {
      term(false);
      skip_ws();
      while (!at_end() && peek() == ',') {
        ++pos_;
        term(false);
        skip_ws();
      }
    }
    skip_ws();
    if (!at_end()) fail("unexpected trailing character");
    return Partition::make(parts_);
  }

 private:
  static constexpr std::size_t kMaxParts = std::size_t{1} << 20;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::int64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > std::numeric_limits<Partition::value_type>::max()) {
        pos_ = start;
        fail("integer does not fit in 32 bits");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return v;
  }

  void term(bool allow_exponent) {
    skip_ws();
    const std::size_t start = pos_;
    const std::int64_t value = number();
    std::int64_t count = 1;
    skip_ws();
    if (allow_exponent && !at_end() && peek() == '^') {
      ++pos_;
      count = number();
    }
    if (!parts_.empty() && value > parts_.back() && count > 0) {
      pos_ = start;
      fail("parts are not weakly decreasing");
    }
    if (parts_.size() + static_cast<std::size_t>(count) > kMaxParts) {
      pos_ = start;
      fail("too many parts");
    }
    parts_.insert(parts_.end(), static_cast<std::size_t>(count), value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::int64_t> parts_;
};

}  // namespace detail

/// Parses comma form "3,1,1" or exponent form "(3,1^2)"; "0" and "()" are
/// the zero partition. Whitespace is ignored.
inline Partition parse(std::string_view text) { return detail::PartitionParser(text).run(); }

}  // namespace hallzero

template <>
struct std::hash<hallzero::Partition> {
  std::size_t operator()(const hallzero::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : p.parts()) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
