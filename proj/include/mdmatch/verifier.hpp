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

#ifndef MDMATCH_VERIFIER_HPP_
#define MDMATCH_VERIFIER_HPP_

// Banded verification of a single candidate window w (|w| = |p| = m).
//
// For pattern row i the verifier keeps
//
//   F[i, j] = longest common suffix of p[..i] and w[..j]
//   I[i, j] = longest k with p[i-k+1..i] == reverse(w[j..j+k-1])
//   S[i]    = 1 iff p[0..i] decomposes onto w[0..i]
//
// S[i] is set when one of the following holds:
//   (a) p[i] == w[i] and (i == 0 or S[i-1])
//   (b) F[i, i-k] >= k and F[i-k, i] >= k and (i < 2k or S[i-2k]),
//       1 <= k <= min(alpha, (i+1)/2)
//   (c) I[i, i-k+1] >= k and (i < k or S[i-k]),  2 <= k <= min(beta, i+1)
//
// F is only read on diagonals j - i in [-alpha, alpha] and each diagonal is a
// run length, so one array per side of the main diagonal suffices. I is read on
// anti-diagonal offsets |i - j| <= beta - 1. S is needed max(2*alpha, beta)
// entries back. Working space is O(alpha + beta), independent of m.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mdmatch/core.hpp"

namespace mdmatch {

class Verifier {
 public:
  /// `params` must be non-negative; normalize them against the pattern length
  /// first, since the workspace is sized from them.
  explicit Verifier(SearchParams params);

  const SearchParams& params() const { return params_; }

  /// True iff `pattern` md-matches `window`. Sizes must be equal.
  bool matches(CodedView pattern, CodedView window);

  /// Block decomposition with tie-break (a), then (b) smallest k, then (c)
  /// smallest k, chosen at each block end while scanning left to right.
  std::optional<Witness> witness(CodedView pattern, CodedView window);

  /// Bytes reserved by the workspace buffers.
  std::size_t workspace_bytes() const;

 private:
  struct Choice {
    BlockKind kind;
    std::uint32_t k;
  };

  bool run(CodedView pattern, CodedView window, std::vector<Choice>* choices);

  SearchParams params_;
  std::size_t alpha_;
  std::size_t beta_;
  // f_row_[k] = F[i, i-k], f_col_[k] = F[i-k, i], k in 1..alpha.
  std::vector<std::uint32_t> f_row_;
  std::vector<std::uint32_t> f_col_;
  // inv_[kInvGuard + (beta-1) + d] = I[i, i-d], d in -(beta-1)..beta-1.
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint8_t> s_ring_;
  std::size_t ring_mask_;
};

/// Checks the window t[s..s+m-1]. Params are normalized against m. Throws
/// std::out_of_range("position out of bounds") when s + m > |text|.
bool verify(CodedView pattern, CodedView text, std::size_t s, SearchParams params);
std::optional<Witness> verify_with_witness(CodedView pattern, CodedView text, std::size_t s,
                                           SearchParams params);

}  // namespace mdmatch

#endif  // MDMATCH_VERIFIER_HPP_
