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

#include "mdmatch/verifier.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mdmatch {
namespace {

// Two zero cells below the lowest anti-diagonal offset so that the d-2 lookup
// never needs a bounds check.
constexpr std::size_t kInvGuard = 2;

}  // namespace

Verifier::Verifier(SearchParams params) : params_(params) {
  if (params.alpha < 0 || params.beta < 0)
    throw std::invalid_argument("alpha and beta must be non-negative");
  alpha_ = static_cast<std::size_t>(params.alpha);
  beta_ = static_cast<std::size_t>(params.beta);
  if (alpha_ > 0) {
    f_row_.assign(alpha_ + 1, 0);
    f_col_.assign(alpha_ + 1, 0);
  }
  if (beta_ > 1) inv_.assign(kInvGuard + 2 * beta_ - 1, 0);
  const std::size_t reach = std::max({2 * alpha_, beta_, std::size_t{1}});
  s_ring_.assign(std::bit_ceil(reach + 1), 0);
  ring_mask_ = s_ring_.size() - 1;
}

std::size_t Verifier::workspace_bytes() const {
  return (f_row_.capacity() + f_col_.capacity() + inv_.capacity()) * sizeof(std::uint32_t) +
         s_ring_.capacity() * sizeof(std::uint8_t);
}

bool Verifier::matches(CodedView pattern, CodedView window) {
  return run(pattern, window, nullptr);
}

std::optional<Witness> Verifier::witness(CodedView pattern, CodedView window) {
  std::vector<Choice> choices(pattern.size());
  if (!run(pattern, window, &choices)) return std::nullopt;

  Witness blocks;
  std::size_t end = pattern.size();
  while (end > 0) {
    const Choice c = choices[end - 1];
    const std::size_t span = c.kind == BlockKind::kTranslocation ? 2 * c.k : c.k;
    end -= span;
    blocks.push_back({c.kind, end, c.k});
  }
  std::reverse(blocks.begin(), blocks.end());
  return blocks;
}

bool Verifier::run(CodedView pattern, CodedView window, std::vector<Choice>* choices) {
  const std::size_t m = pattern.size();
  if (window.size() != m) throw std::invalid_argument("unequal lengths");
  if (m == 0) throw std::invalid_argument("empty pattern");

  const std::size_t alpha = std::min(alpha_, m / 2);
  const std::size_t beta = std::min(beta_, m);
  const bool use_f = alpha > 0;
  const bool use_i = beta > 1;
  // Once this many consecutive S entries are 0, no later entry can become 1.
  const std::size_t reach = std::max({2 * alpha, beta, std::size_t{1}});

  if (use_f) {
    std::fill(f_row_.begin(), f_row_.end(), 0);
    std::fill(f_col_.begin(), f_col_.end(), 0);
  }
  if (use_i) std::fill(inv_.begin(), inv_.end(), 0);
  // Cell for anti-diagonal offset d lives at inv_mid + d.
  const std::ptrdiff_t inv_mid = static_cast<std::ptrdiff_t>(kInvGuard + beta_ - 1);
  const std::ptrdiff_t band = static_cast<std::ptrdiff_t>(beta) - 1;

  auto s_at = [&](std::size_t idx) { return s_ring_[idx & ring_mask_] != 0; };

  std::size_t last_one = 0;
  bool any_one = false;
  for (std::size_t i = 0; i < m; ++i) {
    const Code pi = pattern[i];

    if (use_f) {
      const std::size_t top = std::min(alpha, i);
      for (std::size_t k = 1; k <= top; ++k) {
        f_row_[k] = pi == window[i - k] ? f_row_[k] + 1 : 0;
        f_col_[k] = pattern[i - k] == window[i] ? f_col_[k] + 1 : 0;
      }
    }

    if (use_i) {
      // I[i, i-d] = I[i-1, i-d+1] + 1 on a match. Descending d keeps row i-1
      // values at d-2 intact while row i is written in place.
      const auto ii = static_cast<std::ptrdiff_t>(i);
      const std::ptrdiff_t lo = std::max(-band, ii - static_cast<std::ptrdiff_t>(m - 1));
      const std::ptrdiff_t hi = std::min(band, ii);
      std::uint32_t* cell = inv_.data() + inv_mid;
      for (std::ptrdiff_t d = band; d > hi; --d) cell[d] = 0;
      for (std::ptrdiff_t d = hi; d >= lo; --d)
        cell[d] = pi == window[static_cast<std::size_t>(ii - d)] ? cell[d - 2] + 1 : 0;
      for (std::ptrdiff_t d = lo - 1; d >= -band; --d) cell[d] = 0;
    }

    bool ok = false;
    Choice choice{BlockKind::kIdentity, 1};

    if (pi == window[i] && (i == 0 || s_at(i - 1))) ok = true;

    if (!ok && use_f) {
      const std::size_t top = std::min(alpha, (i + 1) / 2);
      for (std::size_t k = 1; k <= top; ++k) {
        if (f_row_[k] >= k && f_col_[k] >= k && (i < 2 * k || s_at(i - 2 * k))) {
          ok = true;
          choice = {BlockKind::kTranslocation, static_cast<std::uint32_t>(k)};
          break;
        }
      }
    }

    if (!ok && use_i) {
      const std::uint32_t* cell = inv_.data() + inv_mid;
      const std::size_t top = std::min(beta, i + 1);
      for (std::size_t k = 2; k <= top; ++k) {
        if (cell[k - 1] >= k && (i < k || s_at(i - k))) {
          ok = true;
          choice = {BlockKind::kInversion, static_cast<std::uint32_t>(k)};
          break;
        }
      }
    }

    s_ring_[i & ring_mask_] = ok ? 1 : 0;
    if (ok) {
      last_one = i;
      any_one = true;
      if (choices) (*choices)[i] = choice;
    } else {
      const std::size_t zeros = any_one ? i - last_one : i + 1;
      if (zeros >= reach) return false;
    }
  }
  return s_at(m - 1);
}

namespace {

CodedView window_at(CodedView pattern, CodedView text, std::size_t s) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  if (s > text.size() || pattern.size() > text.size() - s)
    throw std::out_of_range("position out of bounds");
  return text.subspan(s, pattern.size());
}

}  // namespace

bool verify(CodedView pattern, CodedView text, std::size_t s, SearchParams params) {
  CodedView window = window_at(pattern, text, s);
  Verifier verifier(normalize_params(params, pattern.size()));
  return verifier.matches(pattern, window);
}

std::optional<Witness> verify_with_witness(CodedView pattern, CodedView text, std::size_t s,
                                           SearchParams params) {
  CodedView window = window_at(pattern, text, s);
  Verifier verifier(normalize_params(params, pattern.size()));
  return verifier.witness(pattern, window);
}

}  // namespace mdmatch
