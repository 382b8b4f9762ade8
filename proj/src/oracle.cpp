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

#include "mdmatch/oracle.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace mdmatch::oracle {
namespace {

constexpr std::size_t kUnknown = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kInfinite = kUnknown - 1;

__extension__ using Wide = unsigned __int128;

bool same_factor(CodedView p, CodedView w, std::size_t p_from, std::size_t w_from,
                 std::size_t len) {
  for (std::size_t r = 0; r < len; ++r)
    if (p[p_from + r] != w[w_from + r]) return false;
  return true;
}

bool reversed_factor(CodedView p, CodedView w, std::size_t from, std::size_t len) {
  for (std::size_t r = 0; r < len; ++r)
    if (p[from + r] != w[from + len - 1 - r]) return false;
  return true;
}

// memo_[len] = cheapest decomposition of p[0..len) onto w[0..len).
class PrefixSolver {
 public:
  PrefixSolver(CodedView p, CodedView w, SearchParams params)
      : p_(p), w_(w), memo_(p.size() + 1, kUnknown) {
    alpha_ = params.alpha < 0 ? 0 : static_cast<std::size_t>(params.alpha);
    beta_ = params.beta < 0 ? 0 : static_cast<std::size_t>(params.beta);
    memo_[0] = 0;
  }

  std::size_t cost(std::size_t len) {
    for (std::size_t l = 1; l <= len; ++l)
      if (memo_[l] == kUnknown) memo_[l] = solve(l);
    return memo_[len];
  }

 private:
  std::size_t solve(std::size_t len) {
    std::size_t best = kInfinite;
    auto relax = [&](std::size_t before, std::size_t add) {
      std::size_t c = memo_[before];
      if (c != kInfinite && c + add < best) best = c + add;
    };
    const std::size_t last = len - 1;
    if (p_[last] == w_[last]) relax(last, 0);
    for (std::size_t k = 1; k <= alpha_ && 2 * k <= len; ++k) {
      const std::size_t start = len - 2 * k;
      if (same_factor(p_, w_, start + k, start, k) && same_factor(p_, w_, start, start + k, k))
        relax(start, 1);
    }
    for (std::size_t k = 2; k <= beta_ && k <= len; ++k) {
      const std::size_t start = len - k;
      if (reversed_factor(p_, w_, start, k)) relax(start, 1);
    }
    return best;
  }

  CodedView p_;
  CodedView w_;
  std::size_t alpha_ = 0;
  std::size_t beta_ = 0;
  std::vector<std::size_t> memo_;
};

void check_lengths(CodedView p, CodedView w) {
  if (p.size() != w.size()) throw std::invalid_argument("unequal lengths");
  if (p.empty()) throw std::invalid_argument("empty pattern");
}

}  // namespace

bool oracle_match(CodedView p, CodedView w, SearchParams params) {
  check_lengths(p, w);
  const std::size_t alpha = params.alpha < 0 ? 0 : static_cast<std::size_t>(params.alpha);
  const std::size_t beta = params.beta < 0 ? 0 : static_cast<std::size_t>(params.beta);
  // known[len]: 0 unknown, 1 decomposable, 2 not decomposable.
  std::vector<std::uint8_t> known(p.size() + 1, 0);
  known[0] = 1;
  std::function<bool(std::size_t)> prefix_ok = [&](std::size_t len) -> bool {
    if (known[len] != 0) return known[len] == 1;
    bool ok = p[len - 1] == w[len - 1] && prefix_ok(len - 1);
    for (std::size_t k = 1; !ok && k <= alpha && 2 * k <= len; ++k) {
      const std::size_t start = len - 2 * k;
      ok = same_factor(p, w, start + k, start, k) && same_factor(p, w, start, start + k, k) &&
           prefix_ok(start);
    }
    for (std::size_t k = 2; !ok && k <= beta && k <= len; ++k) {
      const std::size_t start = len - k;
      ok = reversed_factor(p, w, start, k) && prefix_ok(start);
    }
    known[len] = ok ? 1 : 2;
    return ok;
  };
  return prefix_ok(p.size());
}

MdDistance md_distance(CodedView p, CodedView w, SearchParams params) {
  check_lengths(p, w);
  PrefixSolver solver(p, w, params);
  std::size_t c = solver.cost(p.size());
  if (c == kInfinite) return MdDistance::infinity();
  return {c};
}

std::vector<Occurrence> naive_search(CodedView p, CodedView t, SearchParams params) {
  std::vector<Occurrence> out;
  if (p.empty()) throw std::invalid_argument("empty pattern");
  if (p.size() > t.size()) return out;
  for (std::size_t s = 0; s + p.size() <= t.size(); ++s)
    if (oracle_match(p, t.subspan(s, p.size()), params)) out.push_back({s, std::nullopt});
  return out;
}

double permutation_probability(std::span<const std::uint64_t> occ, std::uint64_t m,
                               std::uint64_t sigma) {
  if (sigma == 0) throw std::invalid_argument("sigma must be positive");
  std::uint64_t total = 0;
  std::uint64_t used = 0;
  for (std::uint64_t c : occ) {
    total += c;
    if (c > 0) ++used;
  }
  if (total != m) throw std::invalid_argument("occurrence counts do not sum to m");
  if (used > sigma) throw std::invalid_argument("more symbols than sigma");

  if (m <= 20) {
    // m!/prod(occ!) built as a product of binomials; every partial product is
    // an integer no larger than 20!.
    std::uint64_t multinomial = 1;
    std::uint64_t placed = 0;
    for (std::uint64_t c : occ) {
      for (std::uint64_t r = 1; r <= c; ++r) {
        ++placed;
        multinomial = static_cast<std::uint64_t>(
            static_cast<Wide>(multinomial) * placed / r);
      }
    }
    long double denom = 1.0L;
    for (std::uint64_t r = 0; r < m; ++r) denom *= static_cast<long double>(sigma);
    return static_cast<double>(static_cast<long double>(multinomial) / denom);
  }

  long double log_p = std::lgamma(static_cast<long double>(m) + 1.0L);
  for (std::uint64_t c : occ) log_p -= std::lgamma(static_cast<long double>(c) + 1.0L);
  log_p -= static_cast<long double>(m) * std::log(static_cast<long double>(sigma));
  return static_cast<double>(std::exp(log_p));
}

std::vector<std::uint64_t> symbol_counts(CodedView p, std::size_t sigma) {
  std::vector<std::uint64_t> occ(sigma, 0);
  for (Code c : p) ++occ.at(c);
  return occ;
}

}  // namespace mdmatch::oracle
