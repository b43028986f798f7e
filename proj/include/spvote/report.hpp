#pragma once

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "spvote/combinatorics.hpp"
#include "spvote/probability.hpp"
#include "spvote/stats.hpp"

namespace spvote {

inline std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

/// key=value lines, one per report field.
inline void write_gof(std::ostream& os, const GofReport& r) {
  os << "chi2=" << format_double(r.chi2) << '\n'
     << "df=" << r.df << '\n'
     << "p_value=" << format_double(r.p_value) << '\n'
     << "alpha=" << format_double(r.alpha) << '\n'
     << "pass=" << (r.pass ? "true" : "false") << '\n'
     << "worst_index=" << r.worst_index << '\n'
     << "worst_residual=" << format_double(r.worst_residual) << '\n'
     << "low_expected=" << (r.low_expected ? "true" : "false") << '\n';
}

/// Side-by-side comparison of the two models at n candidates.
///
/// Layout, one bracketed section header per block:
///   report n=<n> samples=<S> seed=<seed> alpha=<a>
///   [pmf]        index,vote,uniform,conitzer   (exact p/q masses, rank order)
///   [distance]   tv=<p/q>
///   [peaks]      peak,uniform,conitzer
///   [ratio]      n,ratio                       (2..max(n,2))
///   [gof uniform] / [gof conitzer]   each sampler against its own pmf
inline std::string cross_model_report(Candidate n, std::uint64_t samples, std::uint64_t seed,
                                      double alpha = default_alpha,
                                      std::uint64_t cap = default_enumeration_cap) {
  const Pmf uniform = pmf_table(Model::uniform, n, cap);
  const Pmf conitzer = pmf_table(Model::conitzer, n, cap);

  std::ostringstream os;
  os << "report n=" << n << " samples=" << samples << " seed=" << seed
     << " alpha=" << format_double(alpha) << '\n';

  os << "[pmf]\nindex,vote,uniform,conitzer\n";
  for (std::uint64_t k = 0; k < uniform.size(); ++k) {
    os << k << ',' << to_string(unrank(n, k)) << ',' << uniform[k] << ',' << conitzer[k] << '\n';
  }

  os << "[distance]\ntv=" << total_variation(uniform, conitzer) << '\n';

  os << "[peaks]\npeak,uniform,conitzer\n";
  const auto peaks_u = peak_distribution(Model::uniform, n);
  const auto peaks_c = peak_distribution(Model::conitzer, n);
  for (Candidate p = 1; p <= n; ++p) os << p << ',' << peaks_u.at(p) << ',' << peaks_c.at(p) << '\n';

  os << "[ratio]\nn,ratio\n";
  for (const auto& row : probability_ratio_trend(std::max<Candidate>(n, 2))) {
    os << row.n << ',' << format_rational(row.ratio) << '\n';
  }

  for (const Pmf* pmf : {&uniform, &conitzer}) {
    os << "[gof " << to_string(pmf->model()) << "]\n";
    if (pmf->size() < 2) {
      os << "skipped=single cell\n";
      continue;
    }
    write_gof(os, chi_square(collect(pmf->model(), n, samples, seed, 1, cap), *pmf, alpha));
  }
  return os.str();
}

}  // namespace spvote
