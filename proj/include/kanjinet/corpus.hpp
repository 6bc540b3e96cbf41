// Copyright 2026 The kanjinet Authors
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

#ifndef KANJINET_CORPUS_HPP
#define KANJINET_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kanjinet {

// One Unicode scalar value after NFC normalization.
using Char = char32_t;

/// A two-character compound: a directed upper -> lower edge. Repeated
/// occurrences of the same pair (alternative readings, listed twice) are
/// folded into `multiplicity`.
struct Compound {
  Char upper = 0;
  Char lower = 0;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Compound&, const Compound&) = default;
};

struct CharSet {
  std::set<Char> members;
  std::string label;

  bool contains(Char c) const { return members.count(c) != 0; }
  std::size_t size() const { return members.size(); }
};

struct ParseWarning {
  std::size_t line = 0;
  std::string reason;
};

struct ParseReport {
  std::size_t accepted = 0;
  std::size_t skipped = 0;
  std::vector<ParseWarning> warnings;
};

enum class ParsePolicy { strict, skip };

struct ParsedCorpus {
  std::vector<Compound> compounds;
  ParseReport report;
};

struct LoadedCharSet {
  CharSet charset;
  // Duplicate entries; not errors.
  std::vector<ParseWarning> warnings;
};

// UTF-8 decode + NFC. Throws ParseError (line 0) on ill-formed UTF-8.
std::u32string normalize_nfc(std::string_view utf8);

std::string to_utf8(Char c);
std::string to_utf8(std::u32string_view s);

/// Reads a word list: one compound per line, '#' comments, blank lines
/// ignored, LF or CRLF. Each line is trimmed and NFC-normalized; exactly two
/// scalars make a compound. Output keeps first-appearance order.
ParsedCorpus parse_compounds(std::istream& in, ParsePolicy policy);

/// One character per line, same comment rules as word lists. Lines holding
/// anything other than a single scalar are errors, as is an empty result.
LoadedCharSet load_charset(std::istream& in, std::string label);

/// Edge-list export: `upper\tlower\tmultiplicity\n`, rows sorted by
/// (upper, lower) code point, which matches UTF-8 byte order.
void write_edge_tsv(std::ostream& out, std::span<const Compound> compounds);

/// Inverse of write_edge_tsv. Rows for an already-seen pair add their
/// multiplicity to it.
std::vector<Compound> read_edge_tsv(std::istream& in);

}  // namespace kanjinet

#endif  // KANJINET_CORPUS_HPP
