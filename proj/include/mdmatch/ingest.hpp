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

#ifndef MDMATCH_INGEST_HPP_
#define MDMATCH_INGEST_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mdmatch::ingest {

struct SequenceRecord {
  std::string id;
  std::string data;

  friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

/// Malformed input; `offset` is the byte offset of the offending byte.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// FASTA reader. Sequence lines are concatenated with whitespace removed and
/// uppercased; input without a leading '>' is a single record with an empty
/// id. LF and CRLF are accepted. Throws FormatError("no sequences") on empty
/// input and for non-printable bytes in sequence lines.
std::vector<SequenceRecord> read_fasta(std::istream& in);
std::vector<SequenceRecord> read_fasta(std::string_view text);

/// Whole stream as one record, bytes verbatim. With `strip_trailing_newline`
/// a final "\n" or "\r\n" is removed.
SequenceRecord read_raw(std::istream& in, bool strip_trailing_newline = true);

void write_fasta(std::ostream& out, const std::vector<SequenceRecord>& records,
                 std::size_t line_width = 60);

/// Byte written for code c by gen_random_text. Starts with "ACGT", then the
/// remaining uppercase letters and digits, so sigma <= 36 survives the FASTA
/// reader's case folding. Codes >= 94 are not printable.
unsigned char random_symbol(std::size_t code);

/// n symbols drawn i.i.d. uniformly from the first sigma random_symbol codes
/// using std::mt19937_64 seeded with `seed`. Throws std::invalid_argument
/// unless n >= 1 and 2 <= sigma <= 256.
std::string gen_random_text(std::size_t n, std::size_t sigma, std::uint64_t seed);

/// `count` substrings of length m at uniform start positions (with
/// replacement). Throws std::invalid_argument when m > |text|, m == 0 or
/// count == 0.
std::vector<std::string> extract_patterns(std::string_view text, std::size_t m,
                                          std::size_t count, std::uint64_t seed);

}  // namespace mdmatch::ingest

#endif  // MDMATCH_INGEST_HPP_
