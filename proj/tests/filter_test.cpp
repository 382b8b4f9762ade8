// Copyright 2026 The mdmatch Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdmatch/filter.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mdmatch/oracle.hpp"
#include "test_util.hpp"

namespace mdmatch {
namespace {

using testing::codes;

constexpr Code a = 'a';
constexpr Code b = 'b';

TEST(InitCounts, PermutationWindow) {
  CountState st = init_counts(codes("abc"), codes("cabxx"), kByteSigma);
  EXPECT_EQ(st.delta(), 0);
  EXPECT_EQ(st.window_start(), 0u);
}

TEST(InitCounts, SignedCounts) {
  CountState st = init_counts(codes("aab"), codes("abbzz"), kByteSigma);
  EXPECT_EQ(st.counts()[a], 1);
  EXPECT_EQ(st.counts()[b], -1);
  EXPECT_EQ(st.delta(), 2);
}

TEST(InitCounts, IdentityWindow) {
  CountState st = init_counts(codes("aa"), codes("aab"), kByteSigma);
  EXPECT_EQ(st.counts()[a], 0);
  EXPECT_EQ(st.delta(), 0);
}

TEST(InitCounts, Errors) {
  EXPECT_THROW(init_counts(codes("abc"), codes("ab"), kByteSigma), std::invalid_argument);
  EXPECT_THROW(init_counts(CodedString{0, 3}, CodedString{0, 1}, 2), std::invalid_argument);
}

TEST(Advance, SameSymbolIsNoOp) {
  CountState st = init_counts(codes("ab"), codes("abba"), kByteSigma);
  auto before = st.counts();
  const auto delta = st.delta();
  st.advance(a, a);
  EXPECT_EQ(st.counts(), before);
  EXPECT_EQ(st.delta(), delta);
  EXPECT_EQ(st.window_start(), 1u);
}

TEST(Advance, SlidesThroughAbba) {
  const CodedString t = codes("abba");
  CountState st = init_counts(codes("ab"), t, kByteSigma);
  EXPECT_EQ(st.delta(), 0);
  st.advance(t[0], t[2]);  // window "bb"
  EXPECT_EQ(st.counts()[a], 1);
  EXPECT_EQ(st.counts()[b], -1);
  EXPECT_EQ(st.delta(), 2);
  st.advance(t[1], t[3]);  // window "ba"
  EXPECT_EQ(st.delta(), 0);
}

TEST(ScanCandidates, Examples) {
  EXPECT_EQ(scan_candidates(codes("ab"), codes("abba"), kByteSigma),
            (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(scan_candidates(codes("ab"), codes("aaaa"), kByteSigma).empty());
  EXPECT_EQ(scan_candidates(codes("a"), codes("aba"), kByteSigma),
            (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(scan_candidates(codes("abc"), codes("abc"), kByteSigma),
            (std::vector<std::size_t>{0}));
  EXPECT_TRUE(scan_candidates(codes("abcd"), codes("abc"), kByteSigma).empty());
}

// Sliding state equals a from-scratch recount at every position, and delta is
// always even.
TEST(CountStateProperty, RollingMatchesRecount) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t sigma = testing::uniform(rng, 2, 8);
    const CodedString t = testing::random_codes(rng, 1000, sigma);
    const std::size_t m = testing::uniform(rng, 1, 40);
    const CodedString p = testing::random_codes(rng, m, sigma);
    CountState st = init_counts(p, t, sigma);
    for (std::size_t s = 0;; ++s) {
      CodedView window(t.data() + s, m);
      ASSERT_EQ(st.delta(), count_distance(p, window, sigma)) << "s=" << s;
      ASSERT_EQ(st.delta() % 2, 0);
      ASSERT_EQ(std::accumulate(st.counts().begin(), st.counts().end(), 0LL), 0);
      if (s + m == t.size()) break;
      st.advance(t[s], t[s + m]);
    }
  }
}

TEST(ScanCandidatesProperty, ExactlyThePermutationWindows) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t sigma = testing::uniform(rng, 2, 3);
    const CodedString t = testing::random_codes(rng, testing::uniform(rng, 1, 80), sigma);
    const std::size_t m = testing::uniform(rng, 1, std::min<std::size_t>(6, t.size()));
    const CodedString p = testing::random_codes(rng, m, sigma);
    std::vector<std::size_t> expected;
    CodedString sorted_p = p;
    std::sort(sorted_p.begin(), sorted_p.end());
    for (std::size_t s = 0; s + m <= t.size(); ++s) {
      CodedString w(t.begin() + static_cast<std::ptrdiff_t>(s),
                    t.begin() + static_cast<std::ptrdiff_t>(s + m));
      std::sort(w.begin(), w.end());
      if (w == sorted_p) expected.push_back(s);
    }
    ASSERT_EQ(scan_candidates(p, t, sigma), expected);

    CodedString shuffled = p;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ASSERT_EQ(scan_candidates(shuffled, t, sigma), expected);
  }
}

// Every md-match window is a permutation of the pattern.
TEST(ScanCandidatesProperty, SoundForTrueMatches) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t m = testing::uniform(rng, 1, 10);
    const CodedString p = testing::random_codes(rng, m, 3);
    const CodedString w = testing::random_codes(rng, m, 3);
    const SearchParams params =
        normalize_params({static_cast<std::int64_t>(m), static_cast<std::int64_t>(m)}, m);
    if (oracle::oracle_match(p, w, params)) {
      ASSERT_EQ(count_distance(p, w, 3), 0);
    }
  }
}

}  // namespace
}  // namespace mdmatch
