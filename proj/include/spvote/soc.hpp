#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spvote/combinatorics.hpp"
#include "spvote/error.hpp"
#include "spvote/vote.hpp"

namespace spvote {

inline constexpr std::string_view soc_alternatives_header = "# NUMBER ALTERNATIVES:";
inline constexpr std::string_view soc_voters_header = "# NUMBER VOTERS:";
inline constexpr std::string_view soc_unique_header = "# NUMBER UNIQUE ORDERS:";

/// Profile entries in file order: descending multiplicity, ties by ascending
/// rank. Votes that are not single-peaked have no rank and come after all
/// single-peaked ones of the same multiplicity, in lexicographic order.
inline std::vector<Profile::Entry> canonical_entries(const Profile& profile) {
  struct Keyed {
    Profile::Entry entry;
    std::optional<ToggleCode> code;
  };
  std::vector<Keyed> keyed;
  for (auto& e : profile.entries()) {
    std::optional<ToggleCode> code;
    if (is_single_peaked(e.vote)) code = encode(e.vote);
    keyed.push_back({std::move(e), std::move(code)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.entry.multiplicity != b.entry.multiplicity) return a.entry.multiplicity > b.entry.multiplicity;
    if (a.code.has_value() != b.code.has_value()) return a.code.has_value();
    if (a.code) return *a.code < *b.code;
    return a.entry.vote < b.entry.vote;
  });
  std::vector<Profile::Entry> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.entry));
  return out;
}

namespace detail {

inline IoError write_failure(const std::string& path) { return IoError("write failed", path); }

template <class Body>
std::uint64_t write_to_path(const std::string& path, Body&& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path);
  const std::uint64_t n = body(out);
  out.flush();
  if (!out) throw write_failure(path);
  return n;
}

}  // namespace detail

/// Writes the strict-order file with LF line endings. Returns bytes written.
inline std::uint64_t write_soc(const Profile& profile, std::ostream& out) {
  std::ostringstream buf;
  buf << soc_alternatives_header << ' ' << profile.candidates() << '\n'
      << soc_voters_header << ' ' << profile.voters() << '\n'
      << soc_unique_header << ' ' << profile.unique_orders() << '\n';
  for (const auto& e : canonical_entries(profile)) {
    buf << e.multiplicity << ':' << ' ';
    for (std::size_t i = 0; i < e.vote.size(); ++i) {
      if (i != 0) buf << ',';
      buf << e.vote[i];
    }
    buf << '\n';
  }
  const std::string text = buf.str();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed", "<stream>");
  return text.size();
}

inline std::uint64_t write_soc(const Profile& profile, const std::string& path) {
  return detail::write_to_path(path, [&](std::ostream& out) { return write_soc(profile, out); });
}

// One vote string per voter, canonical entry order, no header.
inline std::uint64_t write_csv(const Profile& profile, std::ostream& out) {
  std::ostringstream buf;
  for (const auto& e : canonical_entries(profile)) {
    const std::string line = to_string(e.vote) + '\n';
    for (std::uint64_t i = 0; i < e.multiplicity; ++i) buf << line;
  }
  const std::string text = buf.str();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed", "<stream>");
  return text.size();
}

inline std::uint64_t write_csv(const Profile& profile, const std::string& path) {
  return detail::write_to_path(path, [&](std::ostream& out) { return write_csv(profile, out); });
}

/// Parses a strict-order file. Unknown '#' lines before the body are
/// ignored as comments; the three count headers are required and checked
/// against the body.
inline Profile read_soc(std::istream& in) {
  std::optional<std::uint64_t> alternatives;
  std::optional<std::uint64_t> voters;
  std::optional<std::uint64_t> unique;

  struct Line {
    std::size_t number;
    std::uint64_t multiplicity;
    std::vector<Candidate> ranking;
  };
  std::vector<Line> body;

  auto header_value = [](std::string_view line, std::string_view header, std::size_t lineno,
                         std::optional<std::uint64_t>& slot) {
    if (line.substr(0, header.size()) != header) return false;
    if (slot) throw ParseError("duplicate header '" + std::string(header) + "'", lineno);
    std::uint64_t v = 0;
    if (!detail::parse_int(line.substr(header.size()), v)) {
      throw ParseError("bad value for '" + std::string(header) + "'", lineno);
    }
    slot = v;
    return true;
  };

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!body.empty()) throw ParseError("header line after the first order", lineno);
      header_value(line, soc_alternatives_header, lineno, alternatives) ||
          header_value(line, soc_voters_header, lineno, voters) ||
          header_value(line, soc_unique_header, lineno, unique);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected '<count>: <order>'", lineno);
    Line entry{lineno, 0, {}};
    if (!detail::parse_int(line.substr(0, colon), entry.multiplicity) || entry.multiplicity == 0) {
      throw ParseError("bad multiplicity '" + std::string(detail::trim(line.substr(0, colon))) + "'",
                       lineno);
    }
    try {
      entry.ranking = detail::parse_candidate_list(line.substr(colon + 1), ',');
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), lineno);
    }
    body.push_back(std::move(entry));
  }

  if (!alternatives) throw ParseError("missing header '" + std::string(soc_alternatives_header) + "'");
  if (!voters) throw ParseError("missing header '" + std::string(soc_voters_header) + "'");
  if (!unique) throw ParseError("missing header '" + std::string(soc_unique_header) + "'");
  if (*alternatives < 1 || *alternatives > std::numeric_limits<Candidate>::max()) {
    throw ValidationError("number of alternatives must be a positive candidate count");
  }

  const auto n = static_cast<Candidate>(*alternatives);
  Profile profile(n);
  for (auto& line : body) {
    if (line.ranking.size() != n) {
      throw DomainError("line " + std::to_string(line.number) + ": order ranks " +
                        std::to_string(line.ranking.size()) + " candidates, expected " +
                        std::to_string(n));
    }
    Vote vote = [&] {
      try {
        return Vote(std::move(line.ranking));
      } catch (const ValidationError& e) {
        throw DomainError("line " + std::to_string(line.number) + ": " + e.what());
      }
    }();
    if (profile.multiplicity(vote) != 0) {
      throw ValidationError("line " + std::to_string(line.number) + ": duplicate order " +
                            to_string(vote));
    }
    profile.add(vote, line.multiplicity);
  }
  if (profile.voters() != *voters) {
    throw ValidationError("header says " + std::to_string(*voters) + " voters, body has " +
                          std::to_string(profile.voters()));
  }
  if (profile.unique_orders() != *unique) {
    throw ValidationError("header says " + std::to_string(*unique) + " unique orders, body has " +
                          std::to_string(profile.unique_orders()));
  }
  return profile;
}

inline Profile read_soc(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path);
  Profile p = read_soc(static_cast<std::istream&>(in));
  if (in.bad()) throw IoError("read failed", path);
  return p;
}

}  // namespace spvote
