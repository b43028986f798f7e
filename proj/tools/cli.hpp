#pragma once

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spvote/spvote.hpp"

namespace spvote::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_gof_fail = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_data = 65;
inline constexpr int exit_io = 74;

namespace detail {

inline Candidate candidate_count(long long n) {
  if (n < 1 || n > static_cast<long long>(std::numeric_limits<Candidate>::max())) {
    throw DomainError("candidate count must be at least 1, got " + std::to_string(n));
  }
  return static_cast<Candidate>(n);
}

inline Vote vote_for(const std::string& text, Candidate n) {
  Vote v = parse_vote(text);
  if (v.size() != n) {
    throw DomainError("vote " + text + " ranks " + std::to_string(v.size()) +
                      " candidates, expected " + std::to_string(n));
  }
  return v;
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate and analyse single-peaked votes", "spvote"};
  app.require_subcommand(1);
  const std::vector<std::string> models{"uniform", "conitzer"};

  long long n = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double alpha = default_alpha;
  std::string model_name;
  std::string vote_text;

  auto* sample = app.add_subcommand("sample", "Sample a profile and write it as SOC or CSV");
  std::uint64_t voters = 0;
  std::string format = "soc";
  std::string out_path;
  sample->add_option("--model", model_name, "uniform or conitzer")->required()->check(CLI::IsMember(models));
  sample->add_option("-n", n, "Number of candidates")->required();
  sample->add_option("-m", voters, "Number of voters")->required();
  sample->add_option("--seed", seed, "64-bit seed")->required();
  sample->add_option("--format", format, "soc or csv")->check(CLI::IsMember({"soc", "csv"}));
  sample->add_option("--out", out_path, "Output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "List every single-peaked vote in rank order");
  std::string pmf_model;
  std::uint64_t max_votes = default_enumeration_cap;
  enumerate->add_option("-n", n, "Number of candidates")->required();
  enumerate->add_option("--pmf", pmf_model, "Append the exact mass under this model")
      ->check(CLI::IsMember(models));
  enumerate->add_option("--max-votes", max_votes, "Enumeration cap");

  auto* pmf = app.add_subcommand("pmf", "Exact probability of one vote");
  pmf->add_option("--model", model_name, "uniform or conitzer")->required()->check(CLI::IsMember(models));
  pmf->add_option("-n", n, "Number of candidates")->required();
  pmf->add_option("--vote", vote_text, "Vote such as 2>1>3")->required();

  auto* rank_cmd = app.add_subcommand("rank", "Index of a single-peaked vote");
  rank_cmd->add_option("-n", n, "Number of candidates")->required();
  rank_cmd->add_option("--vote", vote_text, "Vote such as 2>1>3")->required();

  auto* unrank_cmd = app.add_subcommand("unrank", "Vote with the given index");
  std::uint64_t index = 0;
  unrank_cmd->add_option("-n", n, "Number of candidates")->required();
  unrank_cmd->add_option("--index", index, "Index in [0, 2^(n-1))")->required();

  auto* gof = app.add_subcommand("gof", "Chi-square test of a sampler against a model's pmf");
  std::string against;
  gof->add_option("--model", model_name, "Sampler")->required()->check(CLI::IsMember(models));
  gof->add_option("--against", against, "Reference pmf")->required()->check(CLI::IsMember(models));
  gof->add_option("-n", n, "Number of candidates")->required();
  gof->add_option("--samples", samples, "Sample count")->required();
  gof->add_option("--seed", seed, "64-bit seed")->required();
  gof->add_option("--alpha", alpha, "Significance level");

  auto* report = app.add_subcommand("report", "Cross-model comparison report");
  report->add_option("-n", n, "Number of candidates")->required();
  report->add_option("--samples", samples, "Sample count per model")->required();
  report->add_option("--seed", seed, "64-bit seed")->required();
  report->add_option("--alpha", alpha, "Significance level");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (sample->parsed()) {
      RngState rng(seed);
      const Profile profile = sample_profile(parse_model(model_name), detail::candidate_count(n), voters, rng);
      if (out_path.empty()) {
        format == "soc" ? write_soc(profile, out) : write_csv(profile, out);
      } else {
        format == "soc" ? write_soc(profile, out_path) : write_csv(profile, out_path);
      }
    } else if (enumerate->parsed()) {
      const Candidate count = detail::candidate_count(n);
      for (const auto& v : enumerate_votes(count, max_votes)) {
        out << to_string(v);
        if (!pmf_model.empty()) out << ' ' << model_pmf(parse_model(pmf_model), v);
        out << '\n';
      }
    } else if (pmf->parsed()) {
      const Vote v = detail::vote_for(vote_text, detail::candidate_count(n));
      const Prob p = model_pmf(parse_model(model_name), v);
      out << p << ' ' << format_double(p.to_double()) << '\n';
    } else if (rank_cmd->parsed()) {
      out << rank(detail::vote_for(vote_text, detail::candidate_count(n))) << '\n';
    } else if (unrank_cmd->parsed()) {
      out << to_string(unrank(detail::candidate_count(n), index)) << '\n';
    } else if (gof->parsed()) {
      const Candidate count = detail::candidate_count(n);
      const Model sampler = parse_model(model_name);
      const Model reference = parse_model(against);
      const GofReport r = chi_square(collect(sampler, count, samples, seed), pmf_table(reference, count), alpha);
      out << "model=" << to_string(sampler) << '\n'
          << "against=" << to_string(reference) << '\n'
          << "n=" << count << '\n'
          << "samples=" << samples << '\n'
          << "seed=" << seed << '\n';
      write_gof(out, r);
      if (r.low_expected) err << "warning: some cells expect fewer than 5 observations\n";
      return r.pass ? exit_ok : exit_gof_fail;
    } else if (report->parsed()) {
      out << cross_model_report(detail::candidate_count(n), samples, seed, alpha);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_data;
  }
  out.flush();
  return exit_ok;
}

}  // namespace spvote::cli
