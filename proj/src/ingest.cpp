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

#include "mdmatch/ingest.hpp"

#include <array>
#include <cctype>
#include <istream>
#include <iterator>
#include <ostream>
#include <random>

namespace mdmatch::ingest {
namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::array<unsigned char, 256> make_symbol_table() {
  std::array<unsigned char, 256> table{};
  std::array<bool, 256> used{};
  std::size_t next = 0;
  auto put = [&](unsigned char c) {
    if (!used[c]) {
      used[c] = true;
      table[next++] = c;
    }
  };
  for (char c : std::string_view("ACGT")) put(static_cast<unsigned char>(c));
  for (int c = 'A'; c <= 'Z'; ++c) put(static_cast<unsigned char>(c));
  for (int c = '0'; c <= '9'; ++c) put(static_cast<unsigned char>(c));
  for (int c = 'a'; c <= 'z'; ++c) put(static_cast<unsigned char>(c));
  for (int c = 0x21; c <= 0x7e; ++c) put(static_cast<unsigned char>(c));
  for (int c = 0x80; c <= 0xff; ++c) put(static_cast<unsigned char>(c));
  for (int c = 0x00; c <= 0x7f; ++c) put(static_cast<unsigned char>(c));
  return table;
}

}  // namespace

std::vector<SequenceRecord> read_fasta(std::string_view text) {
  std::vector<SequenceRecord> records;
  std::size_t pos = 0;
  bool in_record = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.front() == '>') {
      std::string_view id = line.substr(1);
      while (!id.empty() && is_space(static_cast<unsigned char>(id.back()))) id.remove_suffix(1);
      records.push_back({std::string(id), {}});
      in_record = true;
    } else {
      for (std::size_t i = 0; i < line.size(); ++i) {
        const auto c = static_cast<unsigned char>(line[i]);
        if (is_space(c)) continue;
        if (c < 0x21 || c > 0x7e)
          throw FormatError("non-printable byte at offset " + std::to_string(pos + i), pos + i);
        if (!in_record) {
          records.push_back({});
          in_record = true;
        }
        records.back().data.push_back(static_cast<char>(std::toupper(c)));
      }
    }
    pos = eol + 1;
  }
  if (records.empty()) throw FormatError("no sequences", 0);
  return records;
}

std::vector<SequenceRecord> read_fasta(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_fasta(std::string_view(text));
}

SequenceRecord read_raw(std::istream& in, bool strip_trailing_newline) {
  SequenceRecord record;
  record.data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  if (strip_trailing_newline && !record.data.empty() && record.data.back() == '\n') {
    record.data.pop_back();
    if (!record.data.empty() && record.data.back() == '\r') record.data.pop_back();
  }
  return record;
}

void write_fasta(std::ostream& out, const std::vector<SequenceRecord>& records,
                 std::size_t line_width) {
  if (line_width == 0) line_width = 60;
  for (const auto& r : records) {
    out << '>' << r.id << '\n';
    for (std::size_t i = 0; i < r.data.size(); i += line_width)
      out << std::string_view(r.data).substr(i, line_width) << '\n';
  }
}

unsigned char random_symbol(std::size_t code) {
  static const std::array<unsigned char, 256> table = make_symbol_table();
  return table.at(code);
}

std::string gen_random_text(std::size_t n, std::size_t sigma, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (sigma < 2 || sigma > 256) throw std::invalid_argument("sigma must be in [2, 256]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, sigma - 1);
  std::string out(n, '\0');
  for (char& c : out) c = static_cast<char>(random_symbol(pick(rng)));
  return out;
}

std::vector<std::string> extract_patterns(std::string_view text, std::size_t m,
                                          std::size_t count, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("pattern length must be positive");
  if (m > text.size()) throw std::invalid_argument("pattern longer than text");
  if (count == 0) throw std::invalid_argument("count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, text.size() - m);
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(text.substr(pick(rng), m));
  return out;
}

}  // namespace mdmatch::ingest
