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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "hallzero/poset_cache.hpp"

namespace hallzero {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("hallzero-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void expect_same(const DegPoset& a, const DegPoset& b) {
  ASSERT_EQ(a.elements(), b.elements());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.zeta_row(i), b.zeta_row(i));
    EXPECT_EQ(a.moebius_row(i), b.moebius_row(i));
  }
}

TEST(PosetCache, StreamRoundTrip) {
  for (int n : {0, 1, 5, 11}) {
    const auto poset = build_poset(n);
    std::stringstream ss;
    write_poset(ss, poset);
    expect_same(read_poset(ss), poset);
  }
}

TEST(PosetCache, FileLayout) {
  std::stringstream ss;
  write_poset(ss, build_poset(2));
  EXPECT_EQ(ss.str(), "hallzero-degposet 1\nn 2\ncount 2\n(2)\n(1^2)\nzeta\n3\n2\n");
}

TEST(PosetCache, RejectsCorruptFiles) {
  auto read = [](const std::string& text) {
    std::stringstream ss(text);
    return read_poset(ss);
  };
  EXPECT_THROW(read("hallzero-degposet 2\nn 2\ncount 2\n(2)\n(1^2)\nzeta\n3\n2\n"),
               ConsistencyError);
  EXPECT_THROW(read("hallzero-degposet 1\nn 2\ncount 2\n(2)\n(1^2)\nzeta\n3\n"), ConsistencyError);
  EXPECT_THROW(read("hallzero-degposet 1\nn 2\ncount 2\n(2)\n(1^2)\nzeta\n3\n3\n"),
               ConsistencyError);
  EXPECT_THROW(read("hallzero-degposet 1\nn 2\ncount 2\n(1^2)\n(2)\nzeta\n3\n2\n"),
               ConsistencyError);
  EXPECT_THROW(read("garbage"), ConsistencyError);
}

TEST(PosetCache, SaveLoadAndDiskBacking) {
  TempDir dir;
  EXPECT_FALSE(load_poset(6, dir.path()).has_value());
  const auto written = save_poset(build_poset(6), dir.path());
  EXPECT_EQ(written.filename(), "degposet-6.txt");
  auto loaded = load_poset(6, dir.path());
  ASSERT_TRUE(loaded.has_value());
  expect_same(*loaded, build_poset(6));

  PosetCache cache(dir.path());
  const auto seven = cache.get(7);
  EXPECT_TRUE(fs::exists(dir.path() / "degposet-7.txt"));
  EXPECT_EQ(cache.get(7), seven);
  // no temporaries left behind
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    EXPECT_EQ(entry.path().extension(), ".txt") << entry.path();
  }
}

TEST(PosetCache, CorruptFileIsRebuilt) {
  TempDir dir;
  fs::create_directories(dir.path());
  std::ofstream(dir.path() / "degposet-4.txt") << "not a poset";
  PosetCache cache(dir.path());
  expect_same(*cache.get(4), build_poset(4));
  EXPECT_TRUE(load_poset(4, dir.path()).has_value());
}

TEST(PosetCache, ConcurrentAccess) {
  TempDir dir;
  PosetCache cache(dir.path());
  std::vector<std::thread> threads;
  std::vector<std::shared_ptr<const DegPoset>> got(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] { got[t] = cache.get(3 + t % 4); });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) EXPECT_EQ(got[t]->weight(), 3 + t % 4);
}

}  // namespace
}  // namespace hallzero
