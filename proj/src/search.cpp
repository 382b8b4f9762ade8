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

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace mdmatch {

void check_search_input(CodedView pattern, CodedView text, std::size_t sigma) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  auto too_big = [sigma](Code c) { return c >= sigma; };
  if (std::any_of(pattern.begin(), pattern.end(), too_big) ||
      std::any_of(text.begin(), text.end(), too_big))
    throw std::invalid_argument("code out of range");
}

std::vector<Occurrence> fgg_search(CodedView pattern, CodedView text, std::size_t sigma,
                                   SearchParams params, bool with_witness) {
  std::vector<Occurrence> out;
  for_each_occurrence(pattern, text, sigma, params, with_witness,
                      [&](Occurrence occ) { out.push_back(std::move(occ)); });
  return out;
}

std::vector<Occurrence> fgg_search(std::string_view pattern, std::string_view text,
                                   SearchParams params, bool with_witness) {
  const CodedString p = byte_codes(pattern);
  const CodedString t = byte_codes(text);
  return fgg_search(p, t, kByteSigma, params, with_witness);
}

std::vector<Occurrence> scan_all_search(CodedView pattern, CodedView text, SearchParams params,
                                        bool with_witness) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  std::vector<Occurrence> out;
  const std::size_t m = pattern.size();
  if (m > text.size()) return out;
  Verifier verifier(normalize_params(params, m));
  for (std::size_t s = 0; s + m <= text.size(); ++s) {
    CodedView window = text.subspan(s, m);
    if (with_witness) {
      if (auto w = verifier.witness(pattern, window)) out.push_back({s, std::move(w)});
    } else if (verifier.matches(pattern, window)) {
      out.push_back({s, std::nullopt});
    }
  }
  return out;
}

SearchStats search_stats(CodedView pattern, CodedView text, std::size_t sigma,
                         SearchParams params) {
  check_search_input(pattern, text, sigma);
  SearchStats stats;
  const std::size_t m = pattern.size();
  if (m > text.size()) return stats;
  stats.positions_scanned = text.size() - m + 1;
  Verifier verifier(normalize_params(params, m));
  for_each_candidate(pattern, text, sigma, [&](std::size_t s) {
    ++stats.candidates;
    if (verifier.matches(pattern, text.subspan(s, m))) ++stats.matches;
  });
  return stats;
}

std::vector<Occurrence> parallel_fgg_search(CodedView pattern, CodedView text, std::size_t sigma,
                                            SearchParams params, std::size_t threads,
                                            bool with_witness) {
  check_search_input(pattern, text, sigma);
  const std::size_t m = pattern.size();
  if (m > text.size()) return {};
  const std::size_t positions = text.size() - m + 1;
  threads = std::clamp<std::size_t>(threads, 1, positions);
  if (threads == 1) return fgg_search(pattern, text, sigma, params, with_witness);

  std::vector<std::vector<Occurrence>> parts(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (positions + threads - 1) / threads;
  for (std::size_t w = 0; w < threads; ++w) {
    const std::size_t first = w * chunk;
    if (first >= positions) break;
    const std::size_t last = std::min(positions, first + chunk);
    workers.emplace_back([&, w, first, last] {
      CodedView slice = text.subspan(first, last - first + m - 1);
      for_each_occurrence(pattern, slice, sigma, params, with_witness, [&](Occurrence occ) {
        occ.position += first;
        parts[w].push_back(std::move(occ));
      });
    });
  }
  for (auto& t : workers) t.join();

  std::vector<Occurrence> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end(),
            [](const Occurrence& a, const Occurrence& b) { return a.position < b.position; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Occurrence& a, const Occurrence& b) {
                          return a.position == b.position;
                        }),
            out.end());
  return out;
}

}  // namespace mdmatch
