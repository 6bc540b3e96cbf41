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

#include "kanjinet/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_map>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "kanjinet/errors.hpp"

namespace kanjinet {
namespace {

std::u32string decode_utf8(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) throw ParseError(0, "ill-formed UTF-8");
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::u32string nfc(const std::u32string& scalars) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");

  icu::UnicodeString text = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(scalars.data()), static_cast<int32_t>(scalars.size()));
  if (normalizer->isNormalized(text, status) && U_SUCCESS(status)) return scalars;
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = normalizer->normalize(text, status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");

  std::u32string out(static_cast<std::size_t>(normalized.countChar32()), U'\0');
  status = U_ZERO_ERROR;
  normalized.toUTF32(reinterpret_cast<UChar32*>(out.data()), static_cast<int32_t>(out.size()),
                     status);
  if (U_FAILURE(status)) throw std::runtime_error("UTF-32 conversion failed");
  return out;
}

std::u32string_view trim(std::u32string_view s) {
  auto is_space = [](char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Splits the stream into lines with CR stripped and a leading BOM removed.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number_ == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    return true;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

enum class LineKind { content, ignorable };

// Normalized, trimmed content of a line; `kind` tells whether it should be
// skipped entirely (blank or comment).
struct Line {
  LineKind kind = LineKind::ignorable;
  std::u32string text;
};

Line classify(const std::string& raw, std::size_t number) {
  std::u32string decoded;
  try {
    decoded = nfc(decode_utf8(raw));
  } catch (const ParseError& e) {
    throw ParseError(number, e.what());
  }
  std::u32string_view body = trim(decoded);
  if (body.empty() || body.front() == U'#') return {};
  return {LineKind::content, std::u32string(body)};
}

std::uint64_t pair_key(Char a, Char b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

}  // namespace

std::u32string normalize_nfc(std::string_view utf8) { return nfc(decode_utf8(utf8)); }

std::string to_utf8(Char c) {
  std::string out;
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), len, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
  if (error) throw std::invalid_argument("not a Unicode scalar value");
  out.assign(buf, static_cast<std::size_t>(len));
  return out;
}

std::string to_utf8(std::u32string_view s) {
  std::string out;
  for (Char c : s) out += to_utf8(c);
  return out;
}

ParsedCorpus parse_compounds(std::istream& in, ParsePolicy policy) {
  ParsedCorpus result;
  std::unordered_map<std::uint64_t, std::size_t> index;
  LineReader reader(in);
  std::string raw;

  auto reject = [&](std::size_t number, std::string reason) {
    if (policy == ParsePolicy::strict) throw ParseError(number, reason);
    ++result.report.skipped;
    result.report.warnings.push_back({number, std::move(reason)});
  };

  while (reader.next(raw)) {
    Line line;
    try {
      line = classify(raw, reader.number());
    } catch (const ParseError&) {
      reject(reader.number(), "ill-formed UTF-8");
      continue;
    }
    if (line.kind == LineKind::ignorable) continue;
    if (line.text.size() != 2) {
      reject(reader.number(), "expected 2 characters, found " + std::to_string(line.text.size()));
      continue;
    }
    ++result.report.accepted;
    const Char upper = line.text[0];
    const Char lower = line.text[1];
    auto [it, inserted] = index.try_emplace(pair_key(upper, lower), result.compounds.size());
    if (inserted) {
      result.compounds.push_back({upper, lower, 1});
    } else {
      ++result.compounds[it->second].multiplicity;
    }
  }
  return result;
}

LoadedCharSet load_charset(std::istream& in, std::string label) {
  LoadedCharSet result;
  result.charset.label = std::move(label);
  LineReader reader(in);
  std::string raw;
  while (reader.next(raw)) {
    const Line line = classify(raw, reader.number());
    if (line.kind == LineKind::ignorable) continue;
    if (line.text.size() != 1) {
      throw ParseError(reader.number(), "not a single character: '" + to_utf8(line.text) + "'");
    }
    if (!result.charset.members.insert(line.text[0]).second) {
      result.warnings.push_back({reader.number(), "duplicate character " + to_utf8(line.text)});
    }
  }
  if (result.charset.members.empty()) throw ParseError(0, "character set is empty");
  return result;
}

void write_edge_tsv(std::ostream& out, std::span<const Compound> compounds) {
  std::vector<Compound> rows(compounds.begin(), compounds.end());
  std::sort(rows.begin(), rows.end(), [](const Compound& a, const Compound& b) {
    return pair_key(a.upper, a.lower) < pair_key(b.upper, b.lower);
  });
  for (const Compound& c : rows) {
    out << to_utf8(c.upper) << '\t' << to_utf8(c.lower) << '\t' << c.multiplicity << '\n';
  }
}

std::vector<Compound> read_edge_tsv(std::istream& in) {
  std::vector<Compound> result;
  std::unordered_map<std::uint64_t, std::size_t> index;
  LineReader reader(in);
  std::string raw;
  while (reader.next(raw)) {
    if (raw.empty() || raw.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::string_view rest(raw);
    for (;;) {
      const auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (fields.size() != 3) throw ParseError(reader.number(), "expected 3 tab-separated fields");

    Char ends[2];
    for (int f = 0; f < 2; ++f) {
      std::u32string s;
      try {
        s = normalize_nfc(fields[f]);
      } catch (const ParseError&) {
        throw ParseError(reader.number(), "ill-formed UTF-8");
      }
      if (s.size() != 1) throw ParseError(reader.number(), "endpoint is not a single character");
      ends[f] = s[0];
    }
    std::uint64_t multiplicity = 0;
    const auto m = fields[2];
    const auto [ptr, ec] = std::from_chars(m.data(), m.data() + m.size(), multiplicity);
    if (ec != std::errc() || ptr != m.data() + m.size() || multiplicity == 0) {
      throw ParseError(reader.number(), "multiplicity must be a positive integer");
    }
    auto [it, inserted] = index.try_emplace(pair_key(ends[0], ends[1]), result.size());
    if (inserted) {
      result.push_back({ends[0], ends[1], multiplicity});
    } else {
      result[it->second].multiplicity += multiplicity;
    }
  }
  return result;
}

}  // namespace kanjinet
