#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spvote/combinatorics.hpp"
#include "spvote/model.hpp"
#include "spvote/rational.hpp"
#include "spvote/vote.hpp"

namespace spvote {

/// Exact mass of every single-peaked vote over 1..n, indexed by rank.
class Pmf {
 public:
  Pmf(Candidate n, Model model, std::vector<Prob> masses)
      : n_(n), model_(model), masses_(std::move(masses)) {
    if (masses_.size() != count_single_peaked(n)) {
      throw DomainError("pmf for n=" + std::to_string(n) + " needs " +
                        std::to_string(count_single_peaked(n)) + " masses");
    }
    Rational total = 0;
    for (const auto& m : masses_) total += m.value();
    if (total != 1) throw ValidationError("pmf masses sum to " + format_rational(total));
  }

  Candidate candidates() const noexcept { return n_; }
  Model model() const noexcept { return model_; }
  const std::vector<Prob>& masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return masses_.size(); }
  const Prob& operator[](std::uint64_t index) const { return masses_.at(index); }
  const Prob& mass_of(const Vote& vote) const { return masses_.at(rank(vote)); }

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  Candidate n_;
  Model model_;
  std::vector<Prob> masses_;
};

namespace detail {
inline void require_single_peaked(const Vote& vote) {
  if (!is_single_peaked(vote)) throw DomainError("vote " + to_string(vote) + " is not single-peaked");
}
}  // namespace detail

// Uniform over the 2^(n-1) single-peaked votes.
inline Prob ic_pmf(const Vote& vote) {
  detail::require_single_peaked(vote);
  return Prob(Rational(1) / pow2(vote.size() - 1));
}

// (1/n) * (1/2)^(k-1), k = the earlier of the positions of 1 and n: every
// extension step before an extreme is ranked was a fair coin, every later one
// is forced.
inline Prob conitzer_pmf(const Vote& vote) {
  detail::require_single_peaked(vote);
  const Candidate n = vote.size();
  const auto k = std::min(vote.position_of(1), vote.position_of(n));
  return Prob(Rational(1) / (Rational(n) * pow2(static_cast<unsigned>(k - 1))));
}

inline Prob model_pmf(Model model, const Vote& vote) {
  return model == Model::uniform ? ic_pmf(vote) : conitzer_pmf(vote);
}

/// Closed-form table for `model` over all votes in rank order.
inline Pmf pmf_table(Model model, Candidate n, std::uint64_t cap = default_enumeration_cap) {
  std::vector<Prob> masses;
  for (const auto& v : enumerate_votes(n, cap)) masses.push_back(model_pmf(model, v));
  return Pmf(n, model, std::move(masses));
}

/// Conitzer masses obtained by walking the full decision tree of the
/// generator: n equally likely peaks, then a 1/2 branch at every extension
/// step that has a choice and a forced branch otherwise. Independent of the
/// closed form in conitzer_pmf().
inline Pmf conitzer_pmf_oracle(Candidate n, std::uint64_t cap = default_enumeration_cap) {
  const std::uint64_t total = count_single_peaked(n);
  if (total > cap) {
    throw SizeError("decision tree with " + std::to_string(total) + " leaves exceeds the cap of " +
                    std::to_string(cap));
  }
  std::vector<Rational> mass(total, Rational(0));
  std::vector<Candidate> ranking;
  ranking.reserve(n);

  auto expand = [&](auto&& self, Candidate lo, Candidate hi, const Rational& p) -> void {
    if (ranking.size() == n) {
      mass[rank(Vote(ranking))] += p;
      return;
    }
    const bool can_left = lo > 1;
    const bool can_right = hi < n;
    const Rational branch = (can_left && can_right) ? p / 2 : p;
    if (can_left) {
      ranking.push_back(lo - 1);
      self(self, lo - 1, hi, branch);
      ranking.pop_back();
    }
    if (can_right) {
      ranking.push_back(hi + 1);
      self(self, lo, hi + 1, branch);
      ranking.pop_back();
    }
  };

  const Rational peak_mass = Rational(1, n);
  for (Candidate p = 1; p <= n; ++p) {
    ranking.assign(1, p);
    expand(expand, p, p, peak_mass);
  }
  std::vector<Prob> masses(mass.begin(), mass.end());
  return Pmf(n, Model::conitzer, std::move(masses));
}

/// P(peak = p) for p = 1..n.
inline std::map<Candidate, Prob> peak_distribution(Model model, Candidate n) {
  if (n < 1) throw DomainError("candidate count must be at least 1");
  std::map<Candidate, Prob> out;
  if (model == Model::conitzer) {
    for (Candidate p = 1; p <= n; ++p) out.emplace(p, Prob(Rational(1, n)));
    return out;
  }
  // C(n-1, p-1) / 2^(n-1), built row-wise to stay exact for any n.
  const Rational denom = pow2(n - 1);
  BigInt c = 1;
  for (Candidate p = 1; p <= n; ++p) {
    out.emplace(p, Prob(Rational(c) / denom));
    c = c * (n - p) / p;
  }
  return out;
}

inline Prob total_variation(const Pmf& p, const Pmf& q) {
  if (p.candidates() != q.candidates()) {
    throw DomainError("cannot compare pmfs over " + std::to_string(p.candidates()) + " and " +
                      std::to_string(q.candidates()) + " candidates");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += abs(p[i].value() - q[i].value());
  return Prob(sum / 2);
}

struct RatioRow {
  Candidate n;
  Rational ratio;  // IC mass over Conitzer mass of 1>2>...>n
};

inline std::vector<RatioRow> probability_ratio_trend(Candidate n_max) {
  if (n_max < 2) throw DomainError("ratio trend needs n_max >= 2");
  std::vector<RatioRow> rows;
  for (Candidate n = 2; n <= n_max; ++n) {
    const Vote id = Vote::identity(n);
    rows.push_back({n, ic_pmf(id).value() / conitzer_pmf(id).value()});
  }
  return rows;
}

}  // namespace spvote
