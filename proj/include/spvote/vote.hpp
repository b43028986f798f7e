#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spvote/error.hpp"

namespace spvote {

// Candidates are the points 1..n of the left-right axis.
using Candidate = std::uint32_t;

/// A strict ranking of the candidates 1..n, most preferred first.
///
/// Construction validates that the ranking is a permutation of 1..n, so
/// every Vote in circulation is well formed. Whether it is single-peaked is
/// a separate question, see is_single_peaked().
class Vote {
 public:
  explicit Vote(std::vector<Candidate> ranking) : ranking_(std::move(ranking)) {
    if (ranking_.empty()) throw ValidationError("vote must rank at least one candidate");
    const auto n = ranking_.size();
    std::vector<bool> seen(n + 1, false);
    for (Candidate c : ranking_) {
      if (c < 1 || c > n) {
        throw ValidationError("candidate " + std::to_string(c) + " out of range 1.." +
                              std::to_string(n));
      }
      if (seen[c]) throw ValidationError("candidate " + std::to_string(c) + " ranked twice");
      seen[c] = true;
    }
  }

  // 1>2>...>n
  static Vote identity(Candidate n) {
    std::vector<Candidate> r(n);
    for (Candidate i = 0; i < n; ++i) r[i] = i + 1;
    return Vote(std::move(r));
  }

  Candidate size() const noexcept { return static_cast<Candidate>(ranking_.size()); }
  std::span<const Candidate> ranking() const noexcept { return ranking_; }
  Candidate operator[](std::size_t position) const { return ranking_[position]; }
  Candidate top() const noexcept { return ranking_.front(); }
  Candidate bottom() const noexcept { return ranking_.back(); }

  // 1-based position of candidate c in the ranking.
  std::size_t position_of(Candidate c) const {
    auto it = std::find(ranking_.begin(), ranking_.end(), c);
    if (it == ranking_.end()) throw DomainError("candidate " + std::to_string(c) + " not ranked");
    return static_cast<std::size_t>(it - ranking_.begin()) + 1;
  }

  friend bool operator==(const Vote&, const Vote&) = default;
  friend auto operator<=>(const Vote&, const Vote&) = default;

 private:
  std::vector<Candidate> ranking_;
};

/// Inclusive stretch [first, last] of the candidate axis.
class Interval {
 public:
  Interval(Candidate first, Candidate last) : first_(first), last_(last) {
    if (first < 1 || first > last) {
      throw DomainError("invalid interval [" + std::to_string(first) + "," +
                        std::to_string(last) + "]");
    }
  }

  Candidate first() const noexcept { return first_; }
  Candidate last() const noexcept { return last_; }
  Candidate size() const noexcept { return last_ - first_ + 1; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Candidate first_;
  Candidate last_;
};

/// True iff every top-k prefix of the ranking is a contiguous stretch of the
/// axis. Runs in O(n) by tracking the left and right frontier of the prefix.
inline bool is_single_peaked(const Vote& vote) {
  Candidate lo = vote.top();
  Candidate hi = lo;
  for (std::size_t i = 1; i < vote.size(); ++i) {
    const Candidate c = vote[i];
    if (c + 1 == lo) {
      lo = c;
    } else if (c == hi + 1) {
      hi = c;
    } else {
      return false;
    }
  }
  return true;
}

inline Candidate peak_of(const Vote& vote) {
  if (!is_single_peaked(vote)) throw DomainError("vote is not single-peaked");
  return vote.top();
}

inline Candidate last_ranked(const Vote& vote) { return vote.bottom(); }

// Mirror image on the axis: candidate i becomes n+1-i.
inline Vote reverse_axis(const Vote& vote) {
  const Candidate n = vote.size();
  std::vector<Candidate> r(vote.ranking().begin(), vote.ranking().end());
  for (auto& c : r) c = n + 1 - c;
  return Vote(std::move(r));
}

inline std::string to_string(const Vote& vote) {
  std::string out;
  for (std::size_t i = 0; i < vote.size(); ++i) {
    if (i != 0) out += '>';
    out += std::to_string(vote[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Vote& vote) { return os << to_string(vote); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline std::vector<Candidate> parse_candidate_list(std::string_view text, char sep) {
  std::vector<Candidate> ranking;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    const auto token = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    Candidate c = 0;
    if (!parse_int(token, c)) {
      throw ValidationError("bad candidate id '" + std::string(trim(token)) + "'");
    }
    ranking.push_back(c);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return ranking;
}

}  // namespace detail

/// Parses "2>1>3". Surrounding whitespace is allowed; the candidate count is
/// the number of ids.
inline Vote parse_vote(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw ValidationError("empty vote");
  return Vote(detail::parse_candidate_list(text, '>'));
}

/// Multiset of votes over a common candidate set.
class Profile {
 public:
  struct Entry {
    std::uint64_t multiplicity;
    Vote vote;
  };

  explicit Profile(Candidate n) : n_(n) {
    if (n < 1) throw ValidationError("profile needs at least one candidate");
  }

  void add(const Vote& vote, std::uint64_t multiplicity = 1) {
    if (vote.size() != n_) {
      throw DomainError("vote over " + std::to_string(vote.size()) +
                        " candidates added to profile over " + std::to_string(n_));
    }
    if (multiplicity == 0) throw ValidationError("multiplicity must be positive");
    counts_[vote] += multiplicity;
    voters_ += multiplicity;
  }

  Candidate candidates() const noexcept { return n_; }
  std::uint64_t voters() const noexcept { return voters_; }
  std::size_t unique_orders() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }

  std::uint64_t multiplicity(const Vote& vote) const {
    auto it = counts_.find(vote);
    return it == counts_.end() ? 0 : it->second;
  }

  // Lexicographic by ranking; see io for the canonical file order.
  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    out.reserve(counts_.size());
    for (const auto& [vote, mult] : counts_) out.push_back({mult, vote});
    return out;
  }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  Candidate n_;
  std::uint64_t voters_ = 0;
  std::map<Vote, std::uint64_t> counts_;
};

}  // namespace spvote
