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

#ifndef MDMATCH_CORE_HPP_
#define MDMATCH_CORE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mdmatch {

/// Dense alphabet code in 0..sigma-1.
using Code = std::uint32_t;
/// Input symbol. Bytes occupy 0..255; wider symbols use the hashed path.
using Symbol = std::uint32_t;

using CodedString = std::vector<Code>;
using CodedView = std::span<const Code>;

/// Bijective map between input symbols and dense codes, assigned in
/// first-occurrence order.
class Alphabet {
 public:
  Alphabet();

  std::size_t size() const { return decode_.size(); }

  bool contains(Symbol symbol) const;
  /// Throws std::out_of_range for unregistered symbols.
  Code encode(Symbol symbol) const;
  Symbol decode(Code code) const;

  CodedString encode(std::string_view bytes) const;
  CodedString encode(std::span<const Symbol> symbols) const;

  /// Registers `symbol` if new and returns its code.
  Code add(Symbol symbol);

 private:
  static constexpr Code kNoCode = ~Code{0};

  std::array<Code, 256> byte_codes_;
  std::unordered_map<Symbol, Code> wide_codes_;
  std::vector<Symbol> decode_;
};

/// Throws std::invalid_argument("no symbols") when the inputs hold no symbol.
Alphabet build_alphabet(std::span<const std::string_view> sequences);
Alphabet build_alphabet(std::span<const std::span<const Symbol>> sequences);

/// Byte values as codes with sigma = 256; no alphabet needed. Used where only
/// symbol equality matters.
CodedString byte_codes(std::string_view bytes);
inline constexpr std::size_t kByteSigma = 256;

/// alpha bounds each half of a translocation, beta bounds an inverted factor.
struct SearchParams {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(const SearchParams&, const SearchParams&) = default;
};

/// Clamps alpha to floor(m/2) and beta to m. Throws std::invalid_argument for
/// m == 0 or negative values.
SearchParams normalize_params(SearchParams params, std::size_t m);

enum class BlockKind : std::uint8_t { kIdentity, kTranslocation, kInversion };

/// One element of a witness decomposition. `length` is the factor length k;
/// identity blocks have length 1 and translocations span 2k symbols.
struct Block {
  BlockKind kind = BlockKind::kIdentity;
  std::size_t offset = 0;
  std::size_t length = 1;

  std::size_t span() const { return kind == BlockKind::kTranslocation ? 2 * length : length; }

  static Block identity(std::size_t offset) { return {BlockKind::kIdentity, offset, 1}; }
  static Block translocation(std::size_t offset, std::size_t k) {
    return {BlockKind::kTranslocation, offset, k};
  }
  static Block inversion(std::size_t offset, std::size_t k) {
    return {BlockKind::kInversion, offset, k};
  }

  friend bool operator==(const Block&, const Block&) = default;
};

using Witness = std::vector<Block>;

struct Occurrence {
  std::size_t position = 0;
  std::optional<Witness> witness;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Applies `blocks` to `pattern`. Returns nullopt if the blocks are not
/// contiguous from offset 0 or do not cover the pattern exactly.
std::optional<CodedString> replay(CodedView pattern, std::span<const Block> blocks);

/// True if `blocks` is contiguous, respects `params` and replays `pattern`
/// onto `window`.
bool witness_valid(CodedView pattern, CodedView window, std::span<const Block> blocks,
                   SearchParams params);

/// `I@off`, `T@off:k`, `V@off:k` tokens separated by spaces.
std::string format_witness(std::span<const Block> blocks);

}  // namespace mdmatch

#endif  // MDMATCH_CORE_HPP_
