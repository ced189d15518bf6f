#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qre/errors.hpp"

namespace qre {

/// Parse-time knobs for FCIDUMP ingestion.
struct FcidumpOptions {
  /// Integral magnitudes below this (Hartree) are dropped at parse time.
  double value_threshold = 1e-12;
};

enum class IntegralKind { core, one_body, two_body };

/// Two records mapped to the same canonical index slot with different values.
/// Last write wins in the stored map; the event is kept for validation.
struct IntegralConflict {
  IntegralKind kind;
  std::array<int, 4> index;  // canonical, 1-based; unused positions are 0
  double old_value;
  double new_value;
  std::size_t line;  // line of the overwriting record
};

namespace detail {

inline constexpr std::uint64_t pack2(std::uint32_t p, std::uint32_t q) {
  return (static_cast<std::uint64_t>(p) << 16) | q;
}

inline constexpr std::uint64_t pack4(std::uint32_t p, std::uint32_t q, std::uint32_t r,
                                     std::uint32_t s) {
  return (static_cast<std::uint64_t>(p) << 48) | (static_cast<std::uint64_t>(q) << 32) |
         (static_cast<std::uint64_t>(r) << 16) | s;
}

inline constexpr std::array<std::uint32_t, 2> unpack2(std::uint64_t key) {
  return {static_cast<std::uint32_t>(key >> 16) & 0xffffu,
          static_cast<std::uint32_t>(key) & 0xffffu};
}

inline constexpr std::array<std::uint32_t, 4> unpack4(std::uint64_t key) {
  return {static_cast<std::uint32_t>(key >> 48) & 0xffffu,
          static_cast<std::uint32_t>(key >> 32) & 0xffffu,
          static_cast<std::uint32_t>(key >> 16) & 0xffffu,
          static_cast<std::uint32_t>(key) & 0xffffu};
}

/// Canonical one-body slot: (max, min).
inline constexpr std::uint64_t canon1(std::uint32_t p, std::uint32_t q) {
  return p >= q ? pack2(p, q) : pack2(q, p);
}

/// Canonical two-body slot for a real chemist-convention integral (pq|rs):
/// order within each pair, then order the pairs, exploiting the 8-fold symmetry.
inline constexpr std::uint64_t canon2(std::uint32_t p, std::uint32_t q, std::uint32_t r,
                                      std::uint32_t s) {
  std::uint32_t i = std::max(p, q), j = std::min(p, q);
  std::uint32_t k = std::max(r, s), l = std::min(r, s);
  if (i < k || (i == k && j < l)) {
    std::swap(i, k);
    std::swap(j, l);
  }
  return pack4(i, j, k, l);
}

}  // namespace detail

/// Immutable electronic-integral data read from an FCIDUMP file.
/// Orbital indices are 1-based on disk and 0-based everywhere in this struct.
struct FcidumpData {
  int norb = 0;            // spatial orbitals
  int nelec = 0;           // electrons
  int ms2 = 0;             // 2 * S_z
  int isym = 1;
  std::vector<int> orbsym;

  double core_energy = 0.0;
  /// h_pq keyed by detail::canon1 over 0-based indices.
  std::unordered_map<std::uint64_t, double> one_body;
  /// (pq|rs) keyed by detail::canon2 over 0-based indices.
  std::unordered_map<std::uint64_t, double> two_body;

  std::vector<IntegralConflict> conflicts;

  double one_body_at(int p, int q) const {
    auto it = one_body.find(detail::canon1(p, q));
    return it == one_body.end() ? 0.0 : it->second;
  }

  double two_body_at(int p, int q, int r, int s) const {
    auto it = two_body.find(detail::canon2(p, q, r, s));
    return it == two_body.end() ? 0.0 : it->second;
  }
};

struct Violation {
  IntegralKind kind;
  std::array<int, 4> index;  // canonical, 1-based
  double magnitude;          // |old - new|
  double old_value;
  double new_value;
  std::size_t line;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
};

inline bool parse_real(std::string tok, double& out) {
  for (char& c : tok) {
    if (c == 'D' || c == 'd') c = 'e';
  }
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !tok.empty();
}

inline bool parse_int(const std::string& tok, long& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !tok.empty();
}

inline bool iequal(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(a[i])) !=
        std::toupper(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

/// Splits the namelist body into KEY=VALUES groups. Keys start with a letter;
/// anything else ("3", "8*1") extends the value list of the current key.
inline std::unordered_map<std::string, std::vector<long>> parse_namelist(
    const std::string& body, std::size_t header_line) {
  std::string norm;
  norm.reserve(body.size() + 8);
  for (char c : body) {
    if (c == ',' || c == '=' || c == '\t' || c == '\r' || c == '\n')
      norm.push_back(' ');
    else
      norm.push_back(c);
  }

  std::unordered_map<std::string, std::vector<long>> keys;
  std::string current;
  std::size_t pos = 0;
  while (pos < norm.size()) {
    while (pos < norm.size() && norm[pos] == ' ') ++pos;
    std::size_t start = pos;
    while (pos < norm.size() && norm[pos] != ' ') ++pos;
    if (start == pos) break;
    std::string tok = norm.substr(start, pos - start);

    if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
      for (char& c : tok) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      current = tok;
      keys.try_emplace(current);
      continue;
    }
    if (current.empty())
      throw ParseError(errc::malformed_header, header_line,
                       "value '" + tok + "' precedes any header key");

    long repeat = 1;
    std::string value_part = tok;
    if (auto star = tok.find('*'); star != std::string::npos) {
      if (!parse_int(tok.substr(0, star), repeat) || repeat < 0)
        throw ParseError(errc::malformed_header, header_line,
                         "bad repeat count in '" + tok + "'");
      value_part = tok.substr(star + 1);
    }
    long value = 0;
    if (!parse_int(value_part, value))
      throw ParseError(errc::malformed_header, header_line,
                       "non-integer header value '" + tok + "'");
    for (long r = 0; r < repeat; ++r) keys[current].push_back(value);
  }
  return keys;
}

}  // namespace detail

/// Parses FCIDUMP text: a "&FCI ... /" (or "&END") namelist header followed by
/// whitespace-separated "value i j k l" records. Returns immutable integral data.
inline FcidumpData parse_fcidump(std::string_view text,
                                 const FcidumpOptions& options = {}) {
  // Split into lines up front so every token keeps its 1-based line number.
  std::vector<std::pair<std::string, std::size_t>> lines;
  {
    std::size_t line_no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.emplace_back(std::move(line), line_no);
      ++line_no;
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  auto is_blank = [](const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
  };

  std::size_t first = 0;
  while (first < lines.size() && is_blank(lines[first].first)) ++first;
  if (first == lines.size())
    throw ParseError(errc::empty_file, 1, "no content");

  // Header: starts at "&FCI", runs to the first "/" or "&END".
  const auto& [head_line, head_no] = lines[first];
  std::size_t head_pos = head_line.find_first_not_of(" \t");
  if (!detail::iequal(std::string_view(head_line).substr(head_pos, 4), "&FCI"))
    throw ParseError(errc::malformed_header, head_no, "expected '&FCI' namelist");

  std::string header_body;
  std::size_t record_start_line = lines.size();
  std::string record_remainder;
  bool terminated = false;
  {
    std::string pending = head_line.substr(head_pos + 4);
    std::size_t idx = first;
    while (true) {
      std::size_t term = std::string::npos;
      std::size_t term_len = 0;
      for (std::size_t i = 0; i + 1 <= pending.size(); ++i) {
        if (pending[i] == '/') {
          term = i;
          term_len = 1;
          break;
        }
        if (i + 4 <= pending.size() &&
            detail::iequal(std::string_view(pending).substr(i, 4), "&END")) {
          term = i;
          term_len = 4;
          break;
        }
      }
      if (term != std::string::npos) {
        header_body += pending.substr(0, term);
        record_remainder = pending.substr(term + term_len);
        record_start_line = idx;
        terminated = true;
        break;
      }
      header_body += pending;
      header_body.push_back(' ');
      ++idx;
      if (idx >= lines.size()) break;
      pending = lines[idx].first;
    }
  }
  if (!terminated)
    throw ParseError(errc::malformed_header, head_no,
                     "header not terminated by '/' or '&END'");

  auto keys = detail::parse_namelist(header_body, head_no);
  auto require = [&](const char* name) {
    auto it = keys.find(name);
    if (it == keys.end() || it->second.empty())
      throw ParseError(errc::malformed_header, head_no,
                       std::string(name) + " missing from header");
    return it->second.front();
  };

  FcidumpData data;
  data.norb = static_cast<int>(require("NORB"));
  data.nelec = static_cast<int>(require("NELEC"));
  if (data.norb < 1)
    throw ParseError(errc::malformed_header, head_no, "NORB must be positive");
  if (data.nelec < 0)
    throw ParseError(errc::malformed_header, head_no, "NELEC must be non-negative");
  if (auto it = keys.find("MS2"); it != keys.end() && !it->second.empty())
    data.ms2 = static_cast<int>(it->second.front());
  if (auto it = keys.find("ISYM"); it != keys.end() && !it->second.empty())
    data.isym = static_cast<int>(it->second.front());
  if (auto it = keys.find("ORBSYM"); it != keys.end() && !it->second.empty()) {
    if (it->second.size() != static_cast<std::size_t>(data.norb))
      throw ParseError(errc::malformed_header, head_no,
                       "ORBSYM length " + std::to_string(it->second.size()) +
                           " does not match NORB=" + std::to_string(data.norb));
    for (long v : it->second) data.orbsym.push_back(static_cast<int>(v));
  } else {
    data.orbsym.assign(static_cast<std::size_t>(data.norb), 1);
  }

  // Record section: a flat token stream consumed in groups of five.
  std::vector<detail::Token> tokens;
  auto push_tokens = [&](const std::string& line, std::size_t line_no) {
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      if (pos > start) tokens.push_back({line.substr(start, pos - start), line_no});
    }
  };
  if (record_start_line < lines.size())
    push_tokens(record_remainder, lines[record_start_line].second);
  for (std::size_t i = record_start_line + 1; i < lines.size(); ++i)
    push_tokens(lines[i].first, lines[i].second);

  if (tokens.size() % 5 != 0)
    throw ParseError(errc::malformed_record, tokens[(tokens.size() / 5) * 5].line,
                     "record is not a 'value i j k l' quintuple");

  auto record_conflict = [&](IntegralKind kind, std::array<int, 4> canonical_1based,
                             double old_value, double new_value, std::size_t line) {
    if (old_value != new_value)
      data.conflicts.push_back({kind, canonical_1based, old_value, new_value, line});
  };

  bool core_seen = false;
  for (std::size_t t = 0; t < tokens.size(); t += 5) {
    const std::size_t line = tokens[t].line;
    double value = 0.0;
    if (!detail::parse_real(tokens[t].text, value))
      throw ParseError(errc::non_numeric_value, line,
                       "cannot parse value '" + tokens[t].text + "'");
    long idx[4];
    for (int n = 0; n < 4; ++n) {
      if (!detail::parse_int(tokens[t + 1 + n].text, idx[n]))
        throw ParseError(errc::non_numeric_value, line,
                         "cannot parse index '" + tokens[t + 1 + n].text + "'");
      if (idx[n] < 0)
        throw ParseError(errc::index_out_of_range, line,
                         "negative orbital index " + std::to_string(idx[n]));
      if (idx[n] > data.norb)
        throw ParseError(errc::index_out_of_range, line,
                         "orbital index " + std::to_string(idx[n]) + " exceeds NORB=" +
                             std::to_string(data.norb));
    }
    const long i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    const bool drop = std::abs(value) < options.value_threshold;

    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (drop) continue;
      if (core_seen)
        record_conflict(IntegralKind::core, {0, 0, 0, 0}, data.core_energy, value, line);
      data.core_energy = value;
      core_seen = true;
      continue;
    }
    if (k == 0 && l == 0) {
      if (i >= 1 && j == 0) continue;  // orbital-energy record, metadata only
      if (i == 0)
        throw ParseError(errc::index_out_of_range, line,
                         "zero orbital index in one-body record");
      if (drop) continue;
      auto key = detail::canon1(static_cast<std::uint32_t>(i - 1),
                                static_cast<std::uint32_t>(j - 1));
      auto [it, inserted] = data.one_body.try_emplace(key, value);
      if (!inserted) {
        auto pq = detail::unpack2(key);
        record_conflict(IntegralKind::one_body,
                        {static_cast<int>(pq[0]) + 1, static_cast<int>(pq[1]) + 1, 0, 0},
                        it->second, value, line);
        it->second = value;
      }
      continue;
    }
    if (i == 0 || j == 0 || k == 0 || l == 0)
      throw ParseError(errc::index_out_of_range, line,
                       "zero orbital index in two-body record");
    if (drop) continue;
    auto key = detail::canon2(
        static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1),
        static_cast<std::uint32_t>(k - 1), static_cast<std::uint32_t>(l - 1));
    auto [it, inserted] = data.two_body.try_emplace(key, value);
    if (!inserted) {
      auto pqrs = detail::unpack4(key);
      record_conflict(IntegralKind::two_body,
                      {static_cast<int>(pqrs[0]) + 1, static_cast<int>(pqrs[1]) + 1,
                       static_cast<int>(pqrs[2]) + 1, static_cast<int>(pqrs[3]) + 1},
                      it->second, value, line);
      it->second = value;
    }
  }
  return data;
}

/// Reports symmetry-invariant violations. Storage is canonical, so the only
/// way an invariant breaks is via conflicting records for one slot; conflicts
/// within the relative tolerance are treated as benign duplicates.
inline ValidationReport validate_integrals(const FcidumpData& data,
                                           double relative_tolerance = 1e-10) {
  ValidationReport report;
  for (const auto& c : data.conflicts) {
    double scale = std::max({1.0, std::abs(c.old_value), std::abs(c.new_value)});
    double magnitude = std::abs(c.old_value - c.new_value);
    if (magnitude > relative_tolerance * scale)
      report.violations.push_back(
          {c.kind, c.index, magnitude, c.old_value, c.new_value, c.line});
  }
  return report;
}

/// Writes canonical FCIDUMP text; parse_fcidump(serialize_fcidump(d)) == d.
inline std::string serialize_fcidump(const FcidumpData& data) {
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "&FCI NORB=%d,NELEC=%d,MS2=%d,\n", data.norb,
                data.nelec, data.ms2);
  out += buf;
  out += "  ORBSYM=";
  for (int s : data.orbsym) {
    std::snprintf(buf, sizeof(buf), "%d,", s);
    out += buf;
  }
  out += "\n";
  std::snprintf(buf, sizeof(buf), "  ISYM=%d,\n&END\n", data.isym);
  out += buf;

  auto sorted_keys = [](const std::unordered_map<std::uint64_t, double>& m) {
    std::vector<std::uint64_t> keys;
    keys.reserve(m.size());
    for (const auto& [k, v] : m) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    return keys;
  };

  for (std::uint64_t key : sorted_keys(data.two_body)) {
    auto x = detail::unpack4(key);
    std::snprintf(buf, sizeof(buf), " %23.16E %3u %3u %3u %3u\n",
                  data.two_body.at(key), x[0] + 1, x[1] + 1, x[2] + 1, x[3] + 1);
    out += buf;
  }
  for (std::uint64_t key : sorted_keys(data.one_body)) {
    auto x = detail::unpack2(key);
    std::snprintf(buf, sizeof(buf), " %23.16E %3u %3u %3u %3u\n",
                  data.one_body.at(key), x[0] + 1, x[1] + 1, 0u, 0u);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), " %23.16E %3u %3u %3u %3u\n", data.core_energy, 0u,
                0u, 0u, 0u);
  out += buf;
  return out;
}

}  // namespace qre
