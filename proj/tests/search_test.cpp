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

#include "mdmatch/search.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mdmatch/ingest.hpp"
#include "mdmatch/oracle.hpp"
#include "test_util.hpp"

namespace mdmatch {
namespace {

using testing::codes;

std::vector<std::size_t> positions(const std::vector<Occurrence>& occ) {
  std::vector<std::size_t> out;
  for (const auto& o : occ) out.push_back(o.position);
  return out;
}

using Positions = std::vector<std::size_t>;

TEST(FggSearch, Examples) {
  EXPECT_EQ(positions(fgg_search("ab", "abba", {1, 0})), (Positions{0, 2}));
  EXPECT_EQ(positions(fgg_search("abcd", "xxcdabxx", {2, 0})), (Positions{2}));
  EXPECT_TRUE(fgg_search("abc", "zzzzz", {1, 3}).empty());
  EXPECT_TRUE(fgg_search("abcdef", "abc", {1, 3}).empty());
  EXPECT_THROW(fgg_search("", "abc", {1, 3}), std::invalid_argument);
}

TEST(FggSearch, RejectsCodesOutsideAlphabet) {
  EXPECT_THROW(fgg_search(CodedString{0, 1}, CodedString{0, 1, 2}, 2, {1, 1}),
               std::invalid_argument);
}

TEST(FggSearch, WitnessesReplay) {
  const CodedString p = codes("abcd");
  const CodedString t = codes("xxcdabxxbadcabdc");
  const SearchParams params{2, 4};
  auto found = fgg_search(p, t, kByteSigma, params, true);
  ASSERT_FALSE(found.empty());
  for (const auto& occ : found) {
    ASSERT_TRUE(occ.witness);
    CodedView window(t.data() + occ.position, p.size());
    EXPECT_TRUE(witness_valid(p, window, *occ.witness, params));
  }
  EXPECT_EQ(positions(found), positions(fgg_search(p, t, kByteSigma, params)));
}

TEST(ScanAllSearch, Examples) {
  EXPECT_EQ(positions(scan_all_search(codes("ab"), codes("abba"), {1, 0})), (Positions{0, 2}));
  EXPECT_EQ(positions(scan_all_search(codes("a"), codes("aaa"), {0, 0})), (Positions{0, 1, 2}));
  EXPECT_TRUE(scan_all_search(codes("aaaa"), codes("aaa"), {0, 0}).empty());
}

TEST(SearchStats, Examples) {
  SearchStats st = search_stats(codes("ab"), codes("abba"), kByteSigma, {1, 0});
  EXPECT_EQ(st.candidates, 2u);
  EXPECT_EQ(st.matches, 2u);
  EXPECT_EQ(st.positions_scanned, 3u);
  // Without operations only the exact window at 0 matches.
  EXPECT_EQ(search_stats(codes("ab"), codes("abba"), kByteSigma, {0, 0}).matches, 1u);

  st = search_stats(codes("ab"), codes("aaaa"), kByteSigma, {1, 2});
  EXPECT_EQ(st.candidates, 0u);
  EXPECT_EQ(st.matches, 0u);

  st = search_stats(codes("acgt"), codes("acgt"), kByteSigma, {1, 2});
  EXPECT_EQ(st.candidates, 1u);
  EXPECT_EQ(st.positions_scanned, 1u);
  EXPECT_DOUBLE_EQ(st.candidate_density(), 1.0);
}

TEST(SearchProperty, AllSchedulesAgree) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t sigma = testing::uniform(rng, 2, 4);
    const CodedString t = testing::random_codes(rng, testing::uniform(rng, 1, 200), sigma);
    const std::size_t m = testing::uniform(rng, 1, std::min<std::size_t>(12, t.size()));
    const CodedString p = testing::random_codes(rng, m, sigma);
    const SearchParams params{static_cast<std::int64_t>(testing::uniform(rng, 0, m / 2)),
                              static_cast<std::int64_t>(testing::uniform(rng, 0, m))};
    const auto fgg = fgg_search(p, t, sigma, params);
    ASSERT_EQ(fgg, scan_all_search(p, t, params));
    ASSERT_EQ(fgg, oracle::naive_search(p, t, params));
    const SearchStats st = search_stats(p, t, sigma, params);
    ASSERT_EQ(st.matches, fgg.size());
    ASSERT_LE(st.matches, st.candidates);
    ASSERT_LE(st.candidates, st.positions_scanned);
  }
}

TEST(SearchProperty, ParallelMatchesSequential) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t sigma = testing::uniform(rng, 2, 3);
    const CodedString t = testing::random_codes(rng, testing::uniform(rng, 1, 3000), sigma);
    const std::size_t m = testing::uniform(rng, 1, std::min<std::size_t>(10, t.size()));
    const CodedString p = testing::random_codes(rng, m, sigma);
    const SearchParams params{static_cast<std::int64_t>(m / 2), static_cast<std::int64_t>(m)};
    const bool witness = trial % 2 == 0;
    const auto expected = fgg_search(p, t, sigma, params, witness);
    for (std::size_t threads : {2u, 3u, 8u})
      ASSERT_EQ(parallel_fgg_search(p, t, sigma, params, threads, witness), expected);
  }
}

TEST(SearchStreaming, DegeneratePatternVisitsEveryPosition) {
  const CodedString t(100000, 0);
  const CodedString p(50, 0);
  std::size_t seen = 0;
  std::size_t last = 0;
  for_each_occurrence(p, t, 1, {25, 50}, false, [&](const Occurrence& occ) {
    if (seen > 0) ASSERT_EQ(occ.position, last + 1);
    last = occ.position;
    ++seen;
  });
  EXPECT_EQ(seen, t.size() - p.size() + 1);
}

TEST(SearchStats, FilterRejectsAlmostEverythingOnLargeAlphabets) {
  for (std::size_t sigma : {8u, 16u}) {
    const std::string text = ingest::gen_random_text(200000, sigma, 71);
    const std::string_view view = text;
    const Alphabet alphabet = build_alphabet(std::span(&view, 1));
    const CodedString t = alphabet.encode(text);
    for (const auto& s : ingest::extract_patterns(text, 16, 10, 73)) {
      const SearchStats st = search_stats(alphabet.encode(s), t, alphabet.size(), {8, 16});
      EXPECT_GE(st.matches, 1u);
      EXPECT_LE(st.candidate_density(), 1e-3) << "sigma=" << sigma;
    }
  }
}

}  // namespace
}  // namespace mdmatch
