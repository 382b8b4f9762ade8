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

#include "mdmatch/core.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "test_util.hpp"

namespace mdmatch {
namespace {

using testing::codes;

Alphabet alphabet_of(std::initializer_list<std::string_view> seqs) {
  std::vector<std::string_view> v(seqs);
  return build_alphabet(v);
}

TEST(Alphabet, FirstOccurrenceOrder) {
  Alphabet a = alphabet_of({"abc"});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.encode('a'), 0u);
  EXPECT_EQ(a.encode('b'), 1u);
  EXPECT_EQ(a.encode('c'), 2u);
}

TEST(Alphabet, SingleSymbol) { EXPECT_EQ(alphabet_of({"aaa"}).size(), 1u); }

TEST(Alphabet, UnionAcrossSequences) {
  Alphabet a = alphabet_of({"ACGT", "TTNN"});
  EXPECT_EQ(a.size(), 5u);
  EXPECT_EQ(a.encode('A'), 0u);
  EXPECT_EQ(a.encode('C'), 1u);
  EXPECT_EQ(a.encode('G'), 2u);
  EXPECT_EQ(a.encode('T'), 3u);
  EXPECT_EQ(a.encode('N'), 4u);
}

TEST(Alphabet, EmptyInputRejected) {
  EXPECT_THROW(alphabet_of({}), std::invalid_argument);
  EXPECT_THROW(alphabet_of({"", ""}), std::invalid_argument);
}

TEST(Alphabet, UnknownSymbolThrows) {
  Alphabet a = alphabet_of({"ab"});
  EXPECT_FALSE(a.contains('z'));
  EXPECT_THROW(a.encode('z'), std::out_of_range);
  EXPECT_THROW(a.encode(std::string_view("az")), std::out_of_range);
  EXPECT_THROW(a.decode(2), std::out_of_range);
}

TEST(Alphabet, WideSymbolsRoundTrip) {
  std::vector<Symbol> seq{70000, 'a', 70000, 1u << 30, 'a'};
  std::span<const Symbol> view(seq);
  Alphabet a = build_alphabet(std::span(&view, 1));
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.encode(70000), 0u);
  EXPECT_EQ(a.encode(Symbol{'a'}), 1u);
  EXPECT_EQ(a.encode(seq), (CodedString{0, 1, 0, 2, 1}));
  for (Code c = 0; c < a.size(); ++c) EXPECT_EQ(a.encode(a.decode(c)), c);
}

TEST(Alphabet, ByteRoundTrip) {
  std::string all;
  for (int c = 255; c >= 0; --c) all.push_back(static_cast<char>(c));
  Alphabet a = alphabet_of({all});
  EXPECT_EQ(a.size(), 256u);
  for (int c = 0; c < 256; ++c) EXPECT_EQ(a.decode(a.encode(static_cast<Symbol>(c))), Symbol(c));
}

TEST(NormalizeParams, ClampsToBounds) {
  EXPECT_EQ(normalize_params({100, 100}, 8), (SearchParams{4, 8}));
  EXPECT_EQ(normalize_params({2, 3}, 8), (SearchParams{2, 3}));
  EXPECT_EQ(normalize_params({0, 0}, 8), (SearchParams{0, 0}));
  EXPECT_EQ(normalize_params({5, 5}, 1), (SearchParams{0, 1}));
}

TEST(NormalizeParams, RejectsBadInput) {
  EXPECT_THROW(normalize_params({1, 1}, 0), std::invalid_argument);
  EXPECT_THROW(normalize_params({-1, 1}, 4), std::invalid_argument);
  EXPECT_THROW(normalize_params({1, -1}, 4), std::invalid_argument);
}

TEST(NormalizeParams, Idempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = testing::uniform(rng, 1, 600);
    SearchParams p{static_cast<std::int64_t>(testing::uniform(rng, 0, 1000)),
                   static_cast<std::int64_t>(testing::uniform(rng, 0, 1000))};
    SearchParams once = normalize_params(p, m);
    EXPECT_EQ(normalize_params(once, m), once);
    EXPECT_LE(once.alpha, static_cast<std::int64_t>(m / 2));
    EXPECT_LE(once.beta, static_cast<std::int64_t>(m));
  }
}

TEST(Replay, AppliesEachBlockKind) {
  const CodedString p = codes("abcdefg");
  Witness blocks{Block::identity(0), Block::translocation(1, 2), Block::inversion(5, 2)};
  auto out = replay(p, blocks);
  ASSERT_TRUE(out);
  EXPECT_EQ(*out, codes("adebcgf"));
  EXPECT_TRUE(witness_valid(p, codes("adebcgf"), blocks, {2, 2}));
  EXPECT_FALSE(witness_valid(p, codes("adebcgf"), blocks, {1, 2}));
  EXPECT_FALSE(witness_valid(p, codes("adebcgf"), blocks, {2, 1}));
  EXPECT_FALSE(witness_valid(p, codes("adebcfg"), blocks, {2, 2}));
}

TEST(Replay, RejectsGapsOverlapsAndShortCover) {
  const CodedString p = codes("abcd");
  EXPECT_FALSE(replay(p, Witness{Block::identity(0), Block::identity(2)}));
  EXPECT_FALSE(replay(p, Witness{Block::inversion(0, 3), Block::inversion(2, 2)}));
  EXPECT_FALSE(replay(p, Witness{Block::identity(0)}));
  EXPECT_FALSE(replay(p, Witness{Block::translocation(0, 1), Block::translocation(2, 2)}));
}

TEST(FormatWitness, Tokens) {
  Witness blocks{Block::identity(0), Block::translocation(1, 1), Block::inversion(3, 4)};
  EXPECT_EQ(format_witness(blocks), "I@0 T@1:1 V@3:4");
  EXPECT_EQ(format_witness({}), "");
}

}  // namespace
}  // namespace mdmatch
