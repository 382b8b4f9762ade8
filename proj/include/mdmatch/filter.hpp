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

#ifndef MDMATCH_FILTER_HPP_
#define MDMATCH_FILTER_HPP_

// Counting filter. For a window w = t[s..s+m-1] the state keeps
//
//   g[c]  = occ_p(c) - occ_w(c)        for every code c
//   delta = sum_c |g[c]|
//
// and delta == 0 exactly when w is a permutation of p. Sliding the window by
// one touches only the outgoing and incoming symbols.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mdmatch/core.hpp"

namespace mdmatch {

class CountState {
 public:
  CountState() = default;

  std::int64_t delta() const { return delta_; }
  std::size_t window_start() const { return window_start_; }
  const std::vector<std::int32_t>& counts() const { return g_; }

  /// Slides the window from s to s+1; `outgoing` is t[s], `incoming` t[s+m].
  void advance(Code outgoing, Code incoming) {
    std::int32_t& a = g_[outgoing];
    std::int32_t& b = g_[incoming];
    delta_ -= abs32(a) + abs32(b);
    ++a;
    --b;
    delta_ += abs32(a) + abs32(b);
    ++window_start_;
  }

 private:
  friend CountState init_counts(CodedView pattern, CodedView text, std::size_t sigma);

  static std::int64_t abs32(std::int32_t v) {
    // Branch-free |v|.
    const std::int32_t mask = v >> 31;
    return static_cast<std::int64_t>((v ^ mask) - mask);
  }

  std::vector<std::int32_t> g_;
  std::int64_t delta_ = 0;
  std::size_t window_start_ = 0;
};

/// State for the window starting at 0. Throws std::invalid_argument when the
/// pattern is longer than the text or a code is >= sigma.
CountState init_counts(CodedView pattern, CodedView text, std::size_t sigma);

/// Calls `on_candidate(s)` for each s in increasing order whose window is a
/// permutation of the pattern. O(n + sigma).
template <typename Fn>
void for_each_candidate(CodedView pattern, CodedView text, std::size_t sigma, Fn&& on_candidate) {
  const std::size_t m = pattern.size();
  const std::size_t n = text.size();
  if (m == 0 || m > n) return;
  CountState state = init_counts(pattern, text, sigma);
  const std::size_t last = n - m;
  for (std::size_t s = 0; s < last; ++s) {
    if (state.delta() == 0) on_candidate(s);
    state.advance(text[s], text[s + m]);
  }
  if (state.delta() == 0) on_candidate(last);
}

std::vector<std::size_t> scan_candidates(CodedView pattern, CodedView text, std::size_t sigma);

/// delta(w, z) = sum_c |occ_w(c) - occ_z(c)| computed from scratch.
std::int64_t count_distance(CodedView w, CodedView z, std::size_t sigma);

}  // namespace mdmatch

#endif  // MDMATCH_FILTER_HPP_
