#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ulam/periodicity.hpp"
#include "ulam/seqgen.hpp"

using namespace ulam;

class KnownPeriodic : public ::testing::TestWithParam<std::pair<std::uint64_t, std::uint64_t>> {};

TEST_P(KnownPeriodic, MatchesBruteForceMinimalPeriod) {
  const auto [a, b] = GetParam();
  const auto data = ulam_terms(SequenceSpec::ulam(a, b, 10000));
  const auto report = detect_period(data);
  const auto want = oracle::minimal_period(diffs(data), kDefaultConfirmations);
  ASSERT_TRUE(want.has_value());
  ASSERT_TRUE(report.periodic);
  EXPECT_EQ(*report.preperiod, want->preperiod);
  EXPECT_EQ(*report.period, want->period);
  EXPECT_GE(report.confirmations, kDefaultConfirmations);
}

INSTANTIATE_TEST_SUITE_P(Inits, KnownPeriodic,
                         ::testing::Values(std::pair{2, 5}, std::pair{2, 7}, std::pair{2, 9},
                                           std::pair{4, 5}, std::pair{4, 9}, std::pair{4, 13}));

TEST(Periodicity, FourNHasThreeEvenTerms) {
  for (const std::uint64_t n : {5, 9, 13, 17}) {
    EXPECT_EQ(detect_period(ulam_terms(SequenceSpec::ulam(4, n, 10000))).even_terms.size(), 3u) << n;
  }
}

TEST(Periodicity, TwoFiveEvens) {
  EXPECT_EQ(detect_period(ulam_terms(SequenceSpec::ulam(2, 5, 10000))).even_terms,
            (std::vector<std::uint64_t>{2, 12}));
}

TEST(Periodicity, UlamOneTwoIsNotPeriodic) {
  const auto report = detect_period(ulam_terms(SequenceSpec::ulam(1, 2, 100000)));
  EXPECT_FALSE(report.periodic);
  EXPECT_FALSE(report.period.has_value());
  EXPECT_FALSE(report.preperiod.has_value());
}

TEST(Periodicity, ConstructedSequences) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint64_t> digit(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = rng() % 20, p = 1 + rng() % 15, reps = 4 + rng() % 5;
    std::vector<std::uint64_t> block(p), d;
    for (auto& x : block) x = digit(rng);
    for (std::size_t i = 0; i < m; ++i) d.push_back(digit(rng));
    for (std::size_t r = 0; r < reps; ++r) d.insert(d.end(), block.begin(), block.end());
    d.push_back(digit(rng));  // a broken partial period at the end
    const auto want = oracle::minimal_period(d, 3);
    const auto got = detect_period(std::span<const std::uint64_t>(d), 3);
    ASSERT_EQ(got.periodic, want.has_value());
    if (want) {
      EXPECT_EQ(*got.period, want->period);
      EXPECT_EQ(*got.preperiod, want->preperiod);
    }
  }
}

TEST(Periodicity, ConfirmationsCountRepeats) {
  const std::vector<std::uint64_t> d{9, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2};
  const auto r = detect_period(std::span<const std::uint64_t>(d), 3);
  ASSERT_TRUE(r.periodic);
  EXPECT_EQ(*r.period, 2u);
  EXPECT_EQ(*r.preperiod, 1u);
  EXPECT_EQ(r.confirmations, 4u);
  EXPECT_FALSE(detect_period(std::span<const std::uint64_t>(d), 5).periodic);
}

TEST(Periodicity, Errors) {
  const std::vector<std::uint64_t> d{1, 1, 1, 1};
  EXPECT_THROW(detect_period(std::span<const std::uint64_t>(d), 2), ArgumentError);
  EXPECT_THROW(detect_period(std::span<const std::uint64_t>()), PreconditionError);
  const std::vector<std::uint64_t> flat{1, 3, 3};
  EXPECT_THROW(diffs(std::span<const std::uint64_t>(flat)), PreconditionError);
}

TEST(EvenCensus, Basic) {
  const std::vector<std::uint64_t> t{1, 2, 3, 4, 6, 8, 11};
  EXPECT_EQ(even_census(std::span<const std::uint64_t>(t)), (std::vector<std::uint64_t>{2, 4, 6, 8}));
}

namespace {

// No even term among the last 90% of the terms.
bool evens_look_finite(const SequenceData& data) {
  const auto cut = data.terms[data.terms.size() / 10];
  const auto evens = even_census(std::span<const std::uint64_t>(data.terms));
  return evens.empty() || evens.back() < cut;
}

}  // namespace

TEST(Periodicity, FinitelyManyEvensGoWithPeriodicity) {
  for (const auto [a, b] : {std::pair{2, 5}, std::pair{2, 7}, std::pair{2, 9}, std::pair{4, 5}, std::pair{4, 13}}) {
    const auto data = ulam_terms(SequenceSpec::ulam(a, b, 10000));
    EXPECT_TRUE(evens_look_finite(data)) << a << ',' << b;
    EXPECT_TRUE(detect_period(data).periodic) << a << ',' << b;
  }
  for (const auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const auto data = ulam_terms(SequenceSpec::ulam(a, b, 10000));
    EXPECT_FALSE(evens_look_finite(data)) << a << ',' << b;
    EXPECT_FALSE(detect_period(data).periodic) << a << ',' << b;
  }
}

// Confirmations count repeats after the first period, so a suffix needs
// min_confirmations + 1 whole periods.
TEST(Periodicity, SuffixKeepsThePeriod) {
  const auto data = ulam_terms(SequenceSpec::ulam(4, 9, 10000));
  const auto d = diffs(data);
  const auto full = detect_period(std::span<const std::uint64_t>(d));
  ASSERT_TRUE(full.periodic);
  const std::size_t p = *full.period;
  for (const std::size_t keep : {d.size() - *full.preperiod, 4 * p, 4 * p + 1, d.size() / 2, d.size() - 1}) {
    const std::span<const std::uint64_t> tail = std::span<const std::uint64_t>(d).last(keep);
    const auto r = detect_period(tail);
    ASSERT_TRUE(r.periodic) << keep;
    EXPECT_EQ(*r.period, p) << keep;
  }
}
