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

#include <algorithm>
#include <stdexcept>

namespace mdmatch {

Alphabet::Alphabet() { byte_codes_.fill(kNoCode); }

bool Alphabet::contains(Symbol symbol) const {
  if (symbol < 256) return byte_codes_[symbol] != kNoCode;
  return wide_codes_.count(symbol) != 0;
}

Code Alphabet::encode(Symbol symbol) const {
  if (symbol < 256) {
    Code code = byte_codes_[symbol];
    if (code == kNoCode) throw std::out_of_range("symbol not in alphabet");
    return code;
  }
  auto it = wide_codes_.find(symbol);
  if (it == wide_codes_.end()) throw std::out_of_range("symbol not in alphabet");
  return it->second;
}

Symbol Alphabet::decode(Code code) const {
  if (code >= decode_.size()) throw std::out_of_range("code not in alphabet");
  return decode_[code];
}

CodedString Alphabet::encode(std::string_view bytes) const {
  CodedString out;
  out.reserve(bytes.size());
  for (unsigned char c : bytes) {
    Code code = byte_codes_[c];
    if (code == kNoCode) throw std::out_of_range("symbol not in alphabet");
    out.push_back(code);
  }
  return out;
}

CodedString Alphabet::encode(std::span<const Symbol> symbols) const {
  CodedString out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(encode(s));
  return out;
}

Code Alphabet::add(Symbol symbol) {
  if (symbol < 256) {
    Code& slot = byte_codes_[symbol];
    if (slot == kNoCode) {
      slot = static_cast<Code>(decode_.size());
      decode_.push_back(symbol);
    }
    return slot;
  }
  auto [it, inserted] = wide_codes_.try_emplace(symbol, static_cast<Code>(decode_.size()));
  if (inserted) decode_.push_back(symbol);
  return it->second;
}

Alphabet build_alphabet(std::span<const std::string_view> sequences) {
  Alphabet alphabet;
  for (std::string_view seq : sequences)
    for (unsigned char c : seq) alphabet.add(c);
  if (alphabet.size() == 0) throw std::invalid_argument("no symbols");
  return alphabet;
}

Alphabet build_alphabet(std::span<const std::span<const Symbol>> sequences) {
  Alphabet alphabet;
  for (auto seq : sequences)
    for (Symbol s : seq) alphabet.add(s);
  if (alphabet.size() == 0) throw std::invalid_argument("no symbols");
  return alphabet;
}

CodedString byte_codes(std::string_view bytes) {
  CodedString out(bytes.size());
  std::transform(bytes.begin(), bytes.end(), out.begin(),
                 [](char c) { return static_cast<Code>(static_cast<unsigned char>(c)); });
  return out;
}

SearchParams normalize_params(SearchParams params, std::size_t m) {
  if (m == 0) throw std::invalid_argument("empty pattern");
  if (params.alpha < 0 || params.beta < 0)
    throw std::invalid_argument("alpha and beta must be non-negative");
  const auto max_alpha = static_cast<std::int64_t>(m / 2);
  const auto max_beta = static_cast<std::int64_t>(m);
  return {std::min(params.alpha, max_alpha), std::min(params.beta, max_beta)};
}

std::optional<CodedString> replay(CodedView pattern, std::span<const Block> blocks) {
  CodedString out(pattern.size());
  std::size_t next = 0;
  for (const Block& b : blocks) {
    if (b.offset != next || b.length == 0 || b.span() > pattern.size() - next) return std::nullopt;
    const std::size_t o = b.offset;
    const std::size_t k = b.length;
    switch (b.kind) {
      case BlockKind::kIdentity:
        if (k != 1) return std::nullopt;
        out[o] = pattern[o];
        break;
      case BlockKind::kTranslocation:
        for (std::size_t r = 0; r < k; ++r) {
          out[o + r] = pattern[o + k + r];
          out[o + k + r] = pattern[o + r];
        }
        break;
      case BlockKind::kInversion:
        for (std::size_t r = 0; r < k; ++r) out[o + r] = pattern[o + k - 1 - r];
        break;
    }
    next += b.span();
  }
  if (next != pattern.size()) return std::nullopt;
  return out;
}

bool witness_valid(CodedView pattern, CodedView window, std::span<const Block> blocks,
                   SearchParams params) {
  if (pattern.size() != window.size()) return false;
  for (const Block& b : blocks) {
    const auto k = static_cast<std::int64_t>(b.length);
    if (b.kind == BlockKind::kTranslocation && (k < 1 || k > params.alpha)) return false;
    if (b.kind == BlockKind::kInversion && (k < 2 || k > params.beta)) return false;
  }
  auto image = replay(pattern, blocks);
  return image && std::equal(image->begin(), image->end(), window.begin());
}

std::string format_witness(std::span<const Block> blocks) {
  std::string out;
  for (const Block& b : blocks) {
    if (!out.empty()) out += ' ';
    switch (b.kind) {
      case BlockKind::kIdentity:
        out += "I@" + std::to_string(b.offset);
        break;
      case BlockKind::kTranslocation:
        out += "T@" + std::to_string(b.offset) + ":" + std::to_string(b.length);
        break;
      case BlockKind::kInversion:
        out += "V@" + std::to_string(b.offset) + ":" + std::to_string(b.length);
        break;
    }
  }
  return out;
}

}  // namespace mdmatch
