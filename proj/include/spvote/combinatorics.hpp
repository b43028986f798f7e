#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "spvote/error.hpp"
#include "spvote/vote.hpp"

namespace spvote {

inline constexpr std::uint64_t default_enumeration_cap = std::uint64_t{1} << 20;

/// The n-1 left/right removal steps that build a single-peaked vote from the
/// bottom up. Step i (0-based) fills ranking position n-i; `false` takes the
/// left end of the remaining interval, `true` the right end. The candidate
/// left over after all steps is the peak.
class ToggleCode {
 public:
  ToggleCode(Candidate n, std::vector<bool> steps) : n_(n), steps_(std::move(steps)) {
    if (n < 1) throw DomainError("candidate count must be at least 1");
    if (steps_.size() != n - 1) {
      throw DomainError("toggle code for n=" + std::to_string(n) + " needs " +
                        std::to_string(n - 1) + " steps");
    }
  }

  // Step 1 is the most significant bit of the index.
  static ToggleCode from_index(Candidate n, std::uint64_t index) {
    if (n < 1) throw DomainError("candidate count must be at least 1");
    if (n > 64) throw OverflowError("packed index supports at most 64 candidates");
    if ((n == 1 && index != 0) || (n > 1 && (index >> (n - 1)) != 0)) {
      throw DomainError("index " + std::to_string(index) + " out of range for n=" +
                        std::to_string(n));
    }
    std::vector<bool> steps(n - 1);
    for (Candidate i = 0; i + 1 < n; ++i) steps[i] = (index >> (n - 2 - i)) & 1U;
    return ToggleCode(n, std::move(steps));
  }

  Candidate candidates() const noexcept { return n_; }
  const std::vector<bool>& steps() const noexcept { return steps_; }

  std::uint64_t packed() const {
    if (n_ > 64) throw OverflowError("packed index supports at most 64 candidates");
    std::uint64_t index = 0;
    for (bool s : steps_) index = (index << 1) | static_cast<std::uint64_t>(s);
    return index;
  }

  friend bool operator==(const ToggleCode&, const ToggleCode&) = default;
  friend auto operator<=>(const ToggleCode& a, const ToggleCode& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.steps_ <=> b.steps_;
  }

 private:
  Candidate n_;
  std::vector<bool> steps_;
};

inline Vote decode(const ToggleCode& code) {
  const Candidate n = code.candidates();
  std::vector<Candidate> ranking(n);
  Candidate lo = 1;
  Candidate hi = n;
  for (Candidate i = 0; i + 1 < n; ++i) ranking[n - 1 - i] = code.steps()[i] ? hi-- : lo++;
  ranking[0] = lo;
  return Vote(std::move(ranking));
}

inline ToggleCode encode(const Vote& vote) {
  const Candidate n = vote.size();
  std::vector<bool> steps(n - 1);
  Candidate lo = 1;
  Candidate hi = n;
  for (Candidate i = 0; i + 1 < n; ++i) {
    const Candidate c = vote[n - 1 - i];
    if (c == lo) {
      ++lo;
    } else if (c == hi) {
      steps[i] = true;
      --hi;
    } else {
      throw DomainError("vote " + to_string(vote) + " is not single-peaked");
    }
  }
  return ToggleCode(n, std::move(steps));
}

/// Number of single-peaked votes over n candidates, 2^(n-1).
inline std::uint64_t count_single_peaked(Candidate n) {
  if (n < 1) throw DomainError("candidate count must be at least 1");
  if (n > 64) throw OverflowError("2^" + std::to_string(n - 1) + " does not fit in 64 bits");
  return std::uint64_t{1} << (n - 1);
}

inline Vote unrank(Candidate n, std::uint64_t index) {
  return decode(ToggleCode::from_index(n, index));
}

inline std::uint64_t rank(const Vote& vote) { return encode(vote).packed(); }

/// All single-peaked votes over 1..n in rank order.
inline std::vector<Vote> enumerate_votes(Candidate n, std::uint64_t cap = default_enumeration_cap) {
  const std::uint64_t total = count_single_peaked(n);
  if (total > cap) {
    throw SizeError("enumerating " + std::to_string(total) + " votes exceeds the cap of " +
                    std::to_string(cap));
  }
  std::vector<Vote> out;
  out.reserve(total);
  for (std::uint64_t k = 0; k < total; ++k) out.push_back(unrank(n, k));
  return out;
}

// C(n, k) with overflow detection.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at each step; divide by the gcd first.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t r = result / g;
    const std::uint64_t d = i / g;
    std::uint64_t scaled;
    if (__builtin_mul_overflow(r, num / d, &scaled)) {
      throw OverflowError("C(" + std::to_string(n) + "," + std::to_string(k) +
                          ") does not fit in 64 bits");
    }
    result = scaled;
  }
  return result;
}

// Votes whose peak is p: choose which p-1 of the n-1 removal steps go left.
inline std::uint64_t count_with_peak(Candidate n, Candidate p) {
  if (n < 1) throw DomainError("candidate count must be at least 1");
  if (p < 1 || p > n) {
    throw DomainError("peak " + std::to_string(p) + " out of range 1.." + std::to_string(n));
  }
  return binomial(n - 1, p - 1);
}

}  // namespace spvote
