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

#ifndef MDMATCH_SEARCH_HPP_
#define MDMATCH_SEARCH_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "mdmatch/core.hpp"
#include "mdmatch/filter.hpp"
#include "mdmatch/verifier.hpp"

namespace mdmatch {

struct SearchStats {
  std::size_t candidates = 0;
  std::size_t matches = 0;
  std::size_t positions_scanned = 0;

  double candidate_density() const {
    return positions_scanned == 0 ? 0.0
                                  : static_cast<double>(candidates) /
                                        static_cast<double>(positions_scanned);
  }
};

/// Throws std::invalid_argument for an empty pattern or a code >= sigma.
void check_search_input(CodedView pattern, CodedView text, std::size_t sigma);

/// Filter-then-verify scan. Calls `on_match(Occurrence)` in position order
/// without buffering. The verifier workspace is allocated once per call.
template <typename Fn>
void for_each_occurrence(CodedView pattern, CodedView text, std::size_t sigma,
                         SearchParams params, bool with_witness, Fn&& on_match) {
  check_search_input(pattern, text, sigma);
  if (pattern.size() > text.size()) return;
  const std::size_t m = pattern.size();
  Verifier verifier(normalize_params(params, m));
  for_each_candidate(pattern, text, sigma, [&](std::size_t s) {
    CodedView window = text.subspan(s, m);
    if (with_witness) {
      if (auto w = verifier.witness(pattern, window)) on_match(Occurrence{s, std::move(w)});
    } else if (verifier.matches(pattern, window)) {
      on_match(Occurrence{s, std::nullopt});
    }
  });
}

std::vector<Occurrence> fgg_search(CodedView pattern, CodedView text, std::size_t sigma,
                                   SearchParams params, bool with_witness = false);

/// Byte strings searched with byte values as codes.
std::vector<Occurrence> fgg_search(std::string_view pattern, std::string_view text,
                                   SearchParams params, bool with_witness = false);

/// Verifies every position with no filter. Same results as fgg_search.
std::vector<Occurrence> scan_all_search(CodedView pattern, CodedView text, SearchParams params,
                                        bool with_witness = false);

SearchStats search_stats(CodedView pattern, CodedView text, std::size_t sigma,
                         SearchParams params);

/// Splits the start positions into `threads` contiguous ranges; each worker
/// scans its slice (extended by m-1 symbols) with its own count state and
/// verifier. Output equals fgg_search.
std::vector<Occurrence> parallel_fgg_search(CodedView pattern, CodedView text, std::size_t sigma,
                                            SearchParams params, std::size_t threads,
                                            bool with_witness = false);

}  // namespace mdmatch

#endif  // MDMATCH_SEARCH_HPP_
