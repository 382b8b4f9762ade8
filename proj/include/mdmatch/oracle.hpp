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

#ifndef MDMATCH_ORACLE_HPP_
#define MDMATCH_ORACLE_HPP_

// Slow reference implementations. Nothing here shares code with the verifier:
// blocks are checked by comparing symbols directly over unbanded prefixes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdmatch/core.hpp"

namespace mdmatch::oracle {

/// Minimum number of translocations and inversions, or infinity.
struct MdDistance {
  std::optional<std::size_t> ops;

  bool finite() const { return ops.has_value(); }
  static MdDistance infinity() { return {}; }

  friend bool operator==(const MdDistance&, const MdDistance&) = default;
};

/// True iff w splits into consecutive blocks, each an equal symbol, a swapped
/// pair of adjacent k-factors (1 <= k <= alpha) or a reversed k-factor
/// (2 <= k <= beta). Throws std::invalid_argument("unequal lengths").
bool oracle_match(CodedView p, CodedView w, SearchParams params);

MdDistance md_distance(CodedView p, CodedView w, SearchParams params);

/// Runs oracle_match at every text position.
std::vector<Occurrence> naive_search(CodedView p, CodedView t, SearchParams params);

/// Probability that a uniform random string of length m over sigma symbols is
/// a permutation of a string with symbol counts `occ`:
///   m! / (prod_c occ(c)!) / sigma^m.
/// Exact integer multinomial for m <= 20, log-gamma beyond. Throws
/// std::invalid_argument when the counts do not sum to m, sigma == 0, or more
/// than sigma counts are non-zero.
double permutation_probability(std::span<const std::uint64_t> occ, std::uint64_t m,
                               std::uint64_t sigma);

/// Per-code counts of `p` over an alphabet of `sigma` codes.
std::vector<std::uint64_t> symbol_counts(CodedView p, std::size_t sigma);

}  // namespace mdmatch::oracle

#endif  // MDMATCH_ORACLE_HPP_
