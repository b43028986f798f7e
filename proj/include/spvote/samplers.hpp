#pragma once

#include <cstdint>
#include <vector>

#include "spvote/error.hpp"
#include "spvote/model.hpp"
#include "spvote/rng.hpp"
#include "spvote/vote.hpp"

namespace spvote {

/// Uniform single-peaked ranking of the candidates in `interval`.
///
/// Each toss removes one end of the remaining interval and places it at the
/// lowest unfilled position: heads takes the left end, tails the right end.
/// The first toss decides the last position. The candidate left over is the
/// peak, so exactly size-1 tosses are consumed and every toss sequence maps to
/// a distinct ranking. This is the bottom-up unrolling of the recursion
///   gen(a,b) = gen(a+1,b) ++ [a]   on heads
///            = gen(a,b-1) ++ [b]   on tails
///   gen(a,a) = [a]
template <CoinSource Coins>
std::vector<Candidate> gen_single_peak(const Interval& interval, Coins& coins) {
  const Candidate size = interval.size();
  std::vector<Candidate> ranking(size);
  Candidate lo = interval.first();
  Candidate hi = interval.last();
  for (Candidate pos = size - 1; pos > 0; --pos) ranking[pos] = coins.coin() ? lo++ : hi--;
  ranking[0] = lo;
  return ranking;
}

template <CoinSource Coins>
Vote uniform_vote(Candidate n, Coins& coins) {
  if (n < 1) throw DomainError("candidate count must be at least 1");
  return Vote(gen_single_peak(Interval(1, n), coins));
}

/// Peak drawn uniformly from 1..n, then the ranked interval grows one
/// neighbour at a time: a fair coin picks the side while both sides have
/// candidates left (heads = left), otherwise the remaining side is taken
/// without consuming randomness.
template <RandomSource Source>
Vote conitzer_vote(Candidate n, Source& source) {
  if (n < 1) throw DomainError("candidate count must be at least 1");
  std::vector<Candidate> ranking;
  ranking.reserve(n);
  const auto peak = static_cast<Candidate>(source.below(n) + 1);
  ranking.push_back(peak);
  Candidate lo = peak;
  Candidate hi = peak;
  while (ranking.size() < n) {
    bool left;
    if (lo == 1) {
      left = false;
    } else if (hi == n) {
      left = true;
    } else {
      left = source.coin();
    }
    ranking.push_back(left ? --lo : ++hi);
  }
  return Vote(std::move(ranking));
}

template <RandomSource Source>
Vote sample_vote(Model model, Candidate n, Source& source) {
  switch (model) {
    case Model::uniform: return uniform_vote(n, source);
    case Model::conitzer: return conitzer_vote(n, source);
  }
  throw DomainError("unknown model");
}

/// m independent votes from `model`, identical votes merged.
inline Profile sample_profile(Model model, Candidate n, std::uint64_t m, RngState& rng) {
  Profile profile(n);
  for (std::uint64_t i = 0; i < m; ++i) profile.add(sample_vote(model, n, rng));
  return profile;
}

}  // namespace spvote
