#include <gtest/gtest.h>

#include "spvote/probability.hpp"
#include "test_support.hpp"

using namespace spvote;

TEST(Prob, InvariantsAndFormat) {
  EXPECT_EQ(to_string(Prob(2, 12)), "1/6");
  EXPECT_EQ(to_string(Prob(1, 1)), "1/1");
  EXPECT_EQ(to_string(Prob()), "0/1");
  EXPECT_THROW(Prob(3, 2), DomainError);
  EXPECT_THROW(Prob(-1, 2), DomainError);
  EXPECT_DOUBLE_EQ(Prob(1, 4).to_double(), 0.25);
}

TEST(IcPmf, Values) {
  for (const char* v : {"1>2>3", "2>1>3", "2>3>1", "3>2>1"}) EXPECT_EQ(ic_pmf(parse_vote(v)), Prob(1, 4));
  EXPECT_EQ(Rational(ic_pmf(parse_vote("2>1>3")).value() + ic_pmf(parse_vote("2>3>1")).value()),
            Rational(1, 2));
  EXPECT_EQ(ic_pmf(parse_vote("1")), Prob(1, 1));
  EXPECT_THROW(ic_pmf(parse_vote("1>3>2")), DomainError);
}

TEST(ConitzerPmf, Values) {
  EXPECT_EQ(conitzer_pmf(parse_vote("1>2>3")), Prob(1, 3));
  EXPECT_EQ(conitzer_pmf(parse_vote("2>1>3")), Prob(1, 6));
  EXPECT_EQ(conitzer_pmf(parse_vote("2>3>1")), Prob(1, 6));
  EXPECT_EQ(conitzer_pmf(parse_vote("1")), Prob(1, 1));
  for (Candidate n = 1; n <= 40; ++n) EXPECT_EQ(conitzer_pmf(Vote::identity(n)), Prob(1, n));
  EXPECT_THROW(conitzer_pmf(parse_vote("1>3>2")), DomainError);
}

TEST(ConitzerOracle, ThreeCandidates) {
  const Pmf oracle = conitzer_pmf_oracle(3);
  EXPECT_EQ(oracle.masses(), (std::vector<Prob>{Prob(1, 3), Prob(1, 6), Prob(1, 6), Prob(1, 3)}));
  EXPECT_EQ(oracle.model(), Model::conitzer);
}

TEST(ConitzerOracle, SingleCandidate) {
  const Pmf oracle = conitzer_pmf_oracle(1);
  ASSERT_EQ(oracle.size(), 1u);
  EXPECT_EQ(oracle[0], Prob(1, 1));
}

TEST(ConitzerOracle, MatchesClosedFormEverywhere) {
  for (Candidate n = 1; n <= 10; ++n) {
    EXPECT_EQ(conitzer_pmf_oracle(n), pmf_table(Model::conitzer, n)) << "n=" << n;
  }
}

TEST(ConitzerOracle, Cap) { EXPECT_THROW(conitzer_pmf_oracle(6, 31), SizeError); }

TEST(Pmf, NormalizedExactly) {
  for (Candidate n = 1; n <= 12; ++n) {
    for (Model m : {Model::uniform, Model::conitzer}) {
      Rational total = 0;
      for (const auto& v : enumerate_votes(n)) total += model_pmf(m, v).value();
      EXPECT_EQ(total, 1) << "n=" << n;
    }
  }
}

TEST(Pmf, RejectsBadTables) {
  EXPECT_THROW(Pmf(2, Model::uniform, {Prob(1, 2)}), DomainError);
  EXPECT_THROW(Pmf(2, Model::uniform, {Prob(1, 2), Prob(1, 3)}), ValidationError);
}

TEST(Pmf, AxisReversalSymmetry) {
  for (Candidate n = 1; n <= 10; ++n) {
    for (const auto& v : enumerate_votes(n)) {
      EXPECT_EQ(ic_pmf(v), ic_pmf(reverse_axis(v)));
      EXPECT_EQ(conitzer_pmf(v), conitzer_pmf(reverse_axis(v)));
    }
  }
}

TEST(PeakDistribution, ThreeCandidates) {
  const auto u = peak_distribution(Model::uniform, 3);
  EXPECT_EQ(u.at(1), Prob(1, 4));
  EXPECT_EQ(u.at(2), Prob(1, 2));
  EXPECT_EQ(u.at(3), Prob(1, 4));
  const auto c = peak_distribution(Model::conitzer, 3);
  for (Candidate p = 1; p <= 3; ++p) EXPECT_EQ(c.at(p), Prob(1, 3));
  EXPECT_THROW(peak_distribution(Model::uniform, 0), DomainError);
}

TEST(PeakDistribution, MatchesGroupedPmf) {
  for (Candidate n = 1; n <= 10; ++n) {
    for (Model m : {Model::uniform, Model::conitzer}) {
      std::map<Candidate, Rational> grouped;
      const Pmf pmf = m == Model::conitzer ? conitzer_pmf_oracle(n) : pmf_table(m, n);
      for (std::uint64_t k = 0; k < pmf.size(); ++k) grouped[unrank(n, k).top()] += pmf[k].value();
      const auto dist = peak_distribution(m, n);
      for (Candidate p = 1; p <= n; ++p) EXPECT_EQ(dist.at(p).value(), grouped[p]);
    }
  }
}

TEST(PeakDistribution, SumsToOneForLargeN) {
  for (Candidate n : {1u, 30u, 100u, 300u}) {
    Rational total = 0;
    for (const auto& [p, mass] : peak_distribution(Model::uniform, n)) total += mass.value();
    EXPECT_EQ(total, 1);
  }
}

TEST(PeakDistribution, MiddleVersusEnds) {
  for (Candidate n = 3; n <= 20; ++n) {
    const auto u = peak_distribution(Model::uniform, n);
    const auto c = peak_distribution(Model::conitzer, n);
    const Rational ends_u = u.at(1).value() + u.at(n).value();
    const Rational ends_c = c.at(1).value() + c.at(n).value();
    EXPECT_EQ(ends_u, Rational(2) / pow2(n - 1));
    EXPECT_EQ(ends_c, Rational(2, n));
    EXPECT_LT(ends_u, ends_c);
    EXPECT_GT(u.at((n + 1) / 2).value(), Rational(1, n));
  }
}

TEST(TotalVariation, Values) {
  const Pmf u3 = pmf_table(Model::uniform, 3);
  const Pmf c3 = pmf_table(Model::conitzer, 3);
  EXPECT_EQ(total_variation(u3, u3), Prob());
  EXPECT_EQ(total_variation(u3, c3), Prob(1, 6));
  EXPECT_EQ(total_variation(pmf_table(Model::uniform, 2), pmf_table(Model::conitzer, 2)), Prob());
  EXPECT_THROW(total_variation(u3, pmf_table(Model::uniform, 4)), DomainError);
}

TEST(TotalVariation, SymmetricAndBounded) {
  for (Candidate n = 1; n <= 10; ++n) {
    const Pmf u = pmf_table(Model::uniform, n);
    const Pmf c = pmf_table(Model::conitzer, n);
    const Prob uc = total_variation(u, c);
    EXPECT_EQ(uc, total_variation(c, u));
    EXPECT_GE(uc.value(), 0);
    EXPECT_LE(uc.value(), 1);
    if (n >= 3) {
      EXPECT_GT(uc.value(), 0);
    }
  }
}

TEST(RatioTrend, Values) {
  const auto rows = probability_ratio_trend(60);
  ASSERT_EQ(rows.size(), 59u);
  EXPECT_EQ(rows[0].n, 2u);
  EXPECT_EQ(rows[0].ratio, 1);
  EXPECT_EQ(rows[1].ratio, Rational(3, 4));
  for (const auto& row : rows) EXPECT_EQ(row.ratio, Rational(row.n) / pow2(row.n - 1));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i].ratio, rows[i - 1].ratio);
    EXPECT_EQ(rows[i].ratio / rows[i - 1].ratio, Rational(rows[i].n, 2 * (rows[i].n - 1)));
  }
  EXPECT_THROW(probability_ratio_trend(1), DomainError);
}
