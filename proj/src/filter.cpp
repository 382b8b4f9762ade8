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

#include <cstdlib>
#include <stdexcept>

namespace mdmatch {

CountState init_counts(CodedView pattern, CodedView text, std::size_t sigma) {
  const std::size_t m = pattern.size();
  if (m > text.size()) throw std::invalid_argument("pattern longer than text");
  CountState state;
  state.g_.assign(sigma, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (pattern[i] >= sigma || text[i] >= sigma) throw std::invalid_argument("code out of range");
    ++state.g_[pattern[i]];
    --state.g_[text[i]];
  }
  for (std::int32_t v : state.g_) state.delta_ += std::abs(v);
  return state;
}

std::vector<std::size_t> scan_candidates(CodedView pattern, CodedView text, std::size_t sigma) {
  std::vector<std::size_t> out;
  for_each_candidate(pattern, text, sigma, [&](std::size_t s) { out.push_back(s); });
  return out;
}

std::int64_t count_distance(CodedView w, CodedView z, std::size_t sigma) {
  std::vector<std::int64_t> diff(sigma, 0);
  for (Code c : w) ++diff.at(c);
  for (Code c : z) --diff.at(c);
  std::int64_t total = 0;
  for (std::int64_t v : diff) total += std::llabs(v);
  return total;
}

}  // namespace mdmatch
