#include <gtest/gtest.h>

#include <map>
#include <set>

#include "spvote/combinatorics.hpp"
#include "test_support.hpp"

using namespace spvote;

TEST(Count, Values) {
  EXPECT_EQ(count_single_peaked(1), 1u);
  EXPECT_EQ(count_single_peaked(3), 4u);
  EXPECT_EQ(count_single_peaked(10), 512u);
  EXPECT_EQ(count_single_peaked(64), std::uint64_t{1} << 63);
  EXPECT_THROW(count_single_peaked(65), OverflowError);
  EXPECT_THROW(count_single_peaked(0), DomainError);
}

TEST(Count, MatchesBruteForce) {
  for (Candidate n = 1; n <= 8; ++n) {
    const auto sp = test::filter_permutations(n, test::has_monotone_flanks);
    EXPECT_EQ(sp.size(), count_single_peaked(n)) << "n=" << n;
  }
}

TEST(Enumerate, ThreeCandidatesInRankOrder) {
  const auto votes = enumerate_votes(3);
  std::vector<std::string> text;
  for (const auto& v : votes) text.push_back(to_string(v));
  EXPECT_EQ(text, (std::vector<std::string>{"3>2>1", "2>3>1", "2>1>3", "1>2>3"}));
}

TEST(Enumerate, SingleCandidate) {
  const auto votes = enumerate_votes(1);
  ASSERT_EQ(votes.size(), 1u);
  EXPECT_EQ(votes[0], parse_vote("1"));
}

TEST(Enumerate, TwelveCandidatesDistinctAndSinglePeaked) {
  const auto votes = enumerate_votes(12);
  EXPECT_EQ(votes.size(), 2048u);
  std::set<Vote> distinct(votes.begin(), votes.end());
  EXPECT_EQ(distinct.size(), 2048u);
  for (const auto& v : votes) EXPECT_TRUE(test::has_monotone_flanks(v));
}

TEST(Enumerate, SetEqualsPermutationFilter) {
  for (Candidate n = 1; n <= 8; ++n) {
    std::set<std::vector<Candidate>> enumerated;
    for (const auto& v : enumerate_votes(n)) enumerated.emplace(v.ranking().begin(), v.ranking().end());
    EXPECT_EQ(enumerated, test::filter_permutations(n, test::has_monotone_flanks));
  }
}

TEST(Enumerate, Cap) {
  EXPECT_NO_THROW(enumerate_votes(21));  // exactly 2^20
  EXPECT_THROW(enumerate_votes(22), SizeError);
  EXPECT_THROW(enumerate_votes(5, 15), SizeError);
  EXPECT_EQ(enumerate_votes(5, 16).size(), 16u);
}

// Half the votes end in n, half in 1; dropping the last candidate leaves the
// votes over the remaining n-1 points.
TEST(Enumerate, HalfSplitOnLastCandidate) {
  for (Candidate n = 2; n <= 12; ++n) {
    const auto votes = enumerate_votes(n);
    std::set<std::vector<Candidate>> end_n;
    std::set<std::vector<Candidate>> end_1;
    for (const auto& v : votes) {
      std::vector<Candidate> head(v.ranking().begin(), v.ranking().end() - 1);
      (last_ranked(v) == n ? end_n : end_1).insert(head);
    }
    EXPECT_EQ(end_n.size(), votes.size() / 2);
    EXPECT_EQ(end_1.size(), votes.size() / 2);
    std::set<std::vector<Candidate>> smaller;
    for (const auto& v : enumerate_votes(n - 1)) smaller.emplace(v.ranking().begin(), v.ranking().end());
    EXPECT_EQ(end_n, smaller);
    std::set<std::vector<Candidate>> shifted;
    for (auto r : smaller) {
      for (auto& c : r) ++c;
      shifted.insert(r);
    }
    EXPECT_EQ(end_1, shifted);
  }
}

TEST(Unrank, HandTraces) {
  EXPECT_EQ(unrank(3, 0), parse_vote("3>2>1"));
  EXPECT_EQ(unrank(3, 3), parse_vote("1>2>3"));
  for (Candidate n = 1; n <= 64; ++n) {
    EXPECT_EQ(unrank(n, count_single_peaked(n) - 1), Vote::identity(n));
  }
}

TEST(Unrank, OutOfRange) {
  EXPECT_THROW(unrank(3, 4), DomainError);
  EXPECT_THROW(unrank(1, 1), DomainError);
  EXPECT_THROW(unrank(0, 0), DomainError);
  EXPECT_THROW(unrank(65, 0), OverflowError);
}

TEST(Rank, Values) {
  EXPECT_EQ(rank(parse_vote("3>2>1")), 0u);
  EXPECT_EQ(rank(parse_vote("1>2>3")), 3u);
  EXPECT_EQ(rank(parse_vote("1")), 0u);
  EXPECT_THROW(rank(parse_vote("1>3>2")), DomainError);
}

TEST(Rank, InverseOfUnrankExhaustive) {
  for (Candidate n = 1; n <= 12; ++n) {
    std::set<Vote> seen;
    for (std::uint64_t k = 0; k < count_single_peaked(n); ++k) {
      const Vote v = unrank(n, k);
      ASSERT_EQ(rank(v), k);
      ASSERT_TRUE(seen.insert(v).second);
    }
  }
}

TEST(Rank, InverseOfUnrankSampledLargeN) {
  RngState rng(17);
  for (Candidate n : {20u, 40u, 63u, 64u}) {
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t k = rng.next() >> (65 - n);
      ASSERT_EQ(rank(unrank(n, k)), k);
    }
  }
}

TEST(ToggleCode, BeyondPackedWidth) {
  std::vector<bool> steps(99);
  for (std::size_t i = 0; i < steps.size(); ++i) steps[i] = i % 3 == 0;
  const ToggleCode code(100, steps);
  const Vote v = decode(code);
  EXPECT_TRUE(is_single_peaked(v));
  EXPECT_EQ(encode(v), code);
  EXPECT_THROW(code.packed(), OverflowError);
  EXPECT_THROW(rank(v), OverflowError);
  EXPECT_THROW(ToggleCode(3, std::vector<bool>(3)), DomainError);
}

TEST(CountWithPeak, Values) {
  EXPECT_EQ(count_with_peak(3, 2), 2u);
  EXPECT_EQ(count_with_peak(3, 1), 1u);
  EXPECT_EQ(count_with_peak(3, 3), 1u);
  EXPECT_THROW(count_with_peak(3, 0), DomainError);
  EXPECT_THROW(count_with_peak(3, 4), DomainError);
  EXPECT_EQ(count_with_peak(64, 32), 916312070471295267ULL);  // C(63, 31)
  EXPECT_THROW(count_with_peak(70, 35), OverflowError);
}

TEST(CountWithPeak, MatchesEnumerationGroupedByPeak) {
  for (Candidate n = 1; n <= 12; ++n) {
    std::map<Candidate, std::uint64_t> by_peak;
    for (const auto& v : enumerate_votes(n)) ++by_peak[peak_of(v)];
    std::uint64_t total = 0;
    for (Candidate p = 1; p <= n; ++p) {
      EXPECT_EQ(count_with_peak(n, p), by_peak[p]) << "n=" << n << " p=" << p;
      EXPECT_EQ(count_with_peak(n, p), count_with_peak(n, n + 1 - p));
      total += count_with_peak(n, p);
    }
    EXPECT_EQ(total, count_single_peaked(n));
  }
}

TEST(CountWithPeak, RowSumsUpToSixtyFour) {
  for (Candidate n = 1; n <= 64; ++n) {
    std::uint64_t total = 0;
    for (Candidate p = 1; p <= n; ++p) total += count_with_peak(n, p);
    EXPECT_EQ(total, count_single_peaked(n)) << "n=" << n;
  }
}
