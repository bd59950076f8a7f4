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

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "degeneration.hpp"

namespace hallzero {

inline constexpr int kPosetCacheVersion = 1;

namespace detail {

inline std::string poset_file_name(int n) { return "degposet-" + std::to_string(n) + ".txt"; }

}  // namespace detail

/// Cache file layout (text, version 1):
///
///   hallzero-degposet 1
///   n <weight>
///   count <number of elements>
///   <one partition per line, exponent form>
///   zeta
///   <one row per line: 64-bit words in hex, least significant column first>
///
/// The Moebius matrix is not stored; it is recomputed on load.
inline void write_poset(std::ostream& os, const DegPoset& poset) {
  os << "hallzero-degposet " << kPosetCacheVersion << '\n';
  os << "n " << poset.weight() << '\n';
  os << "count " << poset.size() << '\n';
  for (const auto& p : poset.elements()) os << format(p) << '\n';
  os << "zeta\n";
  os << std::hex;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& row = poset.zeta_row(i);
    for (std::size_t w = 0; w < row.size(); ++w) {
      if (w > 0) os << ' ';
      os << row[w];
    }
    os << '\n';
  }
  os << std::dec;
}

/// Inverse of write_poset. Throws ConsistencyError on a malformed or
/// mismatched file.
inline DegPoset read_poset(std::istream& is) {
  auto bad = [](const std::string& why) {
    return ConsistencyError("poset cache: " + why);
  };
  std::string tag;
  int version = 0;
  if (!(is >> tag >> version) || tag != "hallzero-degposet") throw bad("missing header");
  if (version != kPosetCacheVersion) throw bad("unsupported version " + std::to_string(version));
  int n = 0;
  std::size_t count = 0;
  if (!(is >> tag >> n) || tag != "n" || n < 0) throw bad("missing weight");
  if (!(is >> tag >> count) || tag != "count") throw bad("missing count");
  std::vector<Partition> elements;
  elements.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string text;
    if (!(is >> text)) throw bad("truncated element list");
    try {
      elements.push_back(parse(text));
    } catch (const std::invalid_argument& e) {
      throw bad(e.what());
    }
  }
  if (!(is >> tag) || tag != "zeta") throw bad("missing zeta section");
  const std::size_t words = (count + 63) / 64;
  std::vector<DegPoset::Row> zeta(count, DegPoset::Row(words, 0));
  is >> std::hex;
  for (auto& row : zeta) {
    for (auto& word : row) {
      if (!(is >> word)) throw bad("truncated zeta matrix");
    }
  }
  is >> std::dec;
  return DegPoset(n, std::move(elements), std::move(zeta));
}

/// Writes the poset to `dir` via a temporary file renamed into place.
inline std::filesystem::path save_poset(const DegPoset& poset, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto target = dir / detail::poset_file_name(poset.weight());
  std::random_device rd;
  const auto tmp = dir / (detail::poset_file_name(poset.weight()) + ".tmp." +
                          std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
                          "." + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    write_poset(out, poset);
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
  return target;
}

/// Loads a cached poset; nullopt when absent or unreadable.
inline std::optional<DegPoset> load_poset(int n, const std::filesystem::path& dir) {
  const auto path = dir / detail::poset_file_name(n);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    DegPoset poset = read_poset(in);
    if (poset.weight() != n) return std::nullopt;
    return poset;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Default on-disk location: $HALLZERO_CACHE_DIR, else $XDG_CACHE_HOME/hallzero,
/// else $HOME/.cache/hallzero. Empty when none of these is set.
inline std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("HALLZERO_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "hallzero";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "hallzero";
  }
  return {};
}

/// Thread-safe store of built posets, optionally backed by a directory.
class PosetCache {
 public:
  PosetCache() = default;
  explicit PosetCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::shared_ptr<const DegPoset> get(int n) {
    std::lock_guard lock(mutex_);
    if (auto it = posets_.find(n); it != posets_.end()) return it->second;
    std::shared_ptr<const DegPoset> poset;
    if (!dir_.empty()) {
      if (auto loaded = load_poset(n, dir_)) poset = std::make_shared<const DegPoset>(std::move(*loaded));
    }
    if (!poset) {
      poset = std::make_shared<const DegPoset>(build_poset(n));
      if (!dir_.empty()) save_poset(*poset, dir_);
    }
    posets_.emplace(n, poset);
    return poset;
  }

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const DegPoset>> posets_;
};

/// Process-wide in-memory cache used by the algebra routines.
inline PosetCache& shared_posets() {
  static PosetCache cache;
  return cache;
}

}  // namespace hallzero
