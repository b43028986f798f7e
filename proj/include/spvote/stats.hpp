#pragma once

#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "spvote/combinatorics.hpp"
#include "spvote/probability.hpp"
#include "spvote/rng.hpp"
#include "spvote/samplers.hpp"
#include "spvote/special_functions.hpp"

namespace spvote {

inline constexpr double default_alpha = 0.001;

// Sample counts binned by vote rank.
struct Histogram {
  Candidate n = 1;
  Model model = Model::uniform;
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> counts;
};

/// Draws `samples` votes from `model` and bins them by rank.
///
/// With one shard the draws come from RngState(seed). With k > 1 shards,
/// shard i draws its share from stream_rng(seed, i) on its own thread and the
/// counts are merged in shard order; the result depends on (seed, k) only.
inline Histogram collect(Model model, Candidate n, std::uint64_t samples, std::uint64_t seed,
                         unsigned shards = 1, std::uint64_t cap = default_enumeration_cap) {
  if (samples < 1) throw DomainError("need at least one sample");
  if (shards < 1) throw DomainError("need at least one shard");
  const std::uint64_t cells = count_single_peaked(n);
  if (cells > cap) {
    throw SizeError("histogram with " + std::to_string(cells) + " cells exceeds the cap of " +
                    std::to_string(cap));
  }

  auto run = [model, n](RngState rng, std::uint64_t draws, std::vector<std::uint64_t>& counts) {
    for (std::uint64_t i = 0; i < draws; ++i) ++counts[rank(sample_vote(model, n, rng))];
  };

  Histogram h{n, model, samples, std::vector<std::uint64_t>(cells, 0)};
  if (shards == 1) {
    run(RngState(seed), samples, h.counts);
    return h;
  }

  std::vector<std::vector<std::uint64_t>> partial(shards, std::vector<std::uint64_t>(cells, 0));
  {
    std::vector<std::jthread> workers;
    for (unsigned i = 0; i < shards; ++i) {
      const std::uint64_t share = samples / shards + (i < samples % shards ? 1 : 0);
      workers.emplace_back(run, stream_rng(seed, i), share, std::ref(partial[i]));
    }
  }
  for (const auto& part : partial) {
    for (std::uint64_t c = 0; c < cells; ++c) h.counts[c] += part[c];
  }
  return h;
}

struct GofReport {
  double chi2 = 0;
  unsigned df = 0;
  double p_value = 1;
  double alpha = default_alpha;
  bool pass = true;
  // Cell with the largest |Pearson residual| (O - E) / sqrt(E).
  std::uint64_t worst_index = 0;
  double worst_residual = 0;
  // Some cell expects fewer than 5 observations; the chi-square approximation
  // is then unreliable.
  bool low_expected = false;
};

/// Pearson chi-square goodness of fit of `hist` against `expected`.
inline GofReport chi_square(const Histogram& hist, const Pmf& expected, double alpha = default_alpha) {
  if (hist.n != expected.candidates() || hist.counts.size() != expected.size()) {
    throw DomainError("histogram and pmf have different cell counts");
  }
  if (expected.size() < 2) throw DomainError("goodness of fit needs at least two cells");
  if (!(alpha > 0 && alpha < 1)) throw DomainError("alpha must lie in (0,1)");

  GofReport r;
  r.alpha = alpha;
  r.df = static_cast<unsigned>(expected.size() - 1);
  const double s = static_cast<double>(hist.samples);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double p = expected[i].to_double();
    if (p <= 0) throw DomainError("expected mass of cell " + std::to_string(i) + " is zero");
    const double e = s * p;
    if (e < 5) r.low_expected = true;
    const double diff = static_cast<double>(hist.counts[i]) - e;
    r.chi2 += diff * diff / e;
    const double residual = diff / std::sqrt(e);
    if (std::fabs(residual) > std::fabs(r.worst_residual)) {
      r.worst_residual = residual;
      r.worst_index = i;
    }
  }
  r.p_value = chi_square_survival(r.chi2, r.df);
  r.pass = r.p_value >= alpha;
  return r;
}

}  // namespace spvote
