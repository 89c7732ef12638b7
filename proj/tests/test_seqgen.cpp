#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ulam/generate.hpp"
#include "ulam/seqgen.hpp"

using namespace ulam;

namespace {

const std::vector<std::uint64_t> kUlamPrefix{1,  2,  3,  4,  6,  8,  11, 13, 16, 18, 26, 28, 36,
                                             38, 47, 48, 53, 57, 62, 69, 72, 77, 82, 87, 97};

SequenceSpec by_limit(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
  SequenceSpec s;
  s.init = {a, b};
  s.limit = limit;
  return s;
}

}  // namespace

TEST(Ulam, PrintedPrefix) {
  EXPECT_EQ(ulam_terms(SequenceSpec::ulam(1, 2, 25)).terms, kUlamPrefix);
}

class UlamBruteForce : public ::testing::TestWithParam<std::pair<std::uint64_t, std::uint64_t>> {};

TEST_P(UlamBruteForce, AgreesWithDefinition) {
  const auto [a, b] = GetParam();
  const std::size_t n = 2500;
  EXPECT_EQ(ulam_terms(SequenceSpec::ulam(a, b, n)).terms, oracle::ulam(a, b, n));
}

INSTANTIATE_TEST_SUITE_P(Inits, UlamBruteForce,
                         ::testing::Values(std::pair{1, 2}, std::pair{1, 3}, std::pair{1, 4},
                                           std::pair{2, 3}, std::pair{2, 5}, std::pair{4, 5},
                                           std::pair{3, 7}, std::pair{5, 13}, std::pair{100, 101}));

// Every integer up to 1e5 above a_2 is a term iff it has exactly one representation.
TEST(Ulam, UniquenessAuditUpTo1e5) {
  const std::uint64_t limit = 100'000;
  const auto data = ulam_terms(by_limit(1, 2, limit));
  std::vector<char> member(limit + 1, 0);
  for (const auto t : data.terms) member[t] = 1;
  for (std::uint64_t v = 3; v <= limit; ++v) {
    int reps = 0;
    for (const auto t : data.terms) {
      if (2 * t >= v || reps > 1) break;
      reps += member[v - t];
    }
    ASSERT_EQ(member[v] == 1, reps == 1) << v;
  }
}

TEST(Ulam, PrefixProperty) {
  const auto longer = ulam_terms(SequenceSpec::ulam(1, 2, 20000));
  const auto shorter = ulam_terms(SequenceSpec::ulam(1, 2, 7000));
  EXPECT_TRUE(std::equal(shorter.terms.begin(), shorter.terms.end(), longer.terms.begin()));
  EXPECT_EQ(prefix(longer, 7000).terms, shorter.terms);
}

TEST(Ulam, Deterministic) {
  EXPECT_EQ(ulam_terms(SequenceSpec::ulam(2, 3, 30000)).terms, ulam_terms(SequenceSpec::ulam(2, 3, 30000)).terms);
}

TEST(Ulam, GapFacts) {
  const auto d = ulam_terms(SequenceSpec::ulam(1, 2, 18858)).terms;
  EXPECT_EQ(d[4952] - d[4951], 262u);
  EXPECT_EQ(d[18857] - d[18856], 315u);
}

// n, n+2, n+4 all present gives n+4 = n + 4 = (n+2) + 2, two distinct
// representations, unless n = 4 where n + 4 is not a sum of distinct terms.
TEST(Ulam, NoThreeTermsSpacedByTwo) {
  const auto d = ulam_terms(SequenceSpec::ulam(1, 2, 100000)).terms;
  std::vector<std::uint64_t> starts;
  for (std::size_t i = 0; i + 2 < d.size(); ++i) {
    if (d[i] > 3 && std::binary_search(d.begin(), d.end(), d[i] + 2) &&
        std::binary_search(d.begin(), d.end(), d[i] + 4)) {
      starts.push_back(d[i]);
    }
  }
  EXPECT_EQ(starts, (std::vector<std::uint64_t>{4}));
}

TEST(Ulam, LimitStopsGeneration) {
  const auto data = ulam_terms(by_limit(1, 2, 98));
  EXPECT_EQ(data.terms, kUlamPrefix);
  EXPECT_EQ(data.generated_up_to, 98u);
  const auto both = [] {
    auto s = by_limit(1, 2, 1000);
    s.count = 10;
    return ulam_terms(s);
  }();
  EXPECT_EQ(both.terms.size(), 10u);
  EXPECT_EQ(both.generated_up_to, 18u);
}

TEST(Ulam, TinyLimits) {
  EXPECT_EQ(ulam_terms(by_limit(3, 10, 5)).terms, std::vector<std::uint64_t>{3});
  EXPECT_EQ(ulam_terms(by_limit(3, 10, 10)).terms, (std::vector<std::uint64_t>{3, 10}));
}

TEST(Ulam, Density) {
  const auto data = ulam_terms(by_limit(1, 2, 100));
  const auto f = density(data, 100);
  EXPECT_EQ(f.numerator, 26u);
  EXPECT_EQ(f.denominator, 100u);
  EXPECT_EQ(density(data, 97).numerator, 25u);
  EXPECT_THROW(density(data, 101), PreconditionError);
  EXPECT_THROW(density(ulam_terms(SequenceSpec::ulam(1, 2, 25)), 98), PreconditionError);
}

TEST(Ulam, InvalidSpecs) {
  EXPECT_THROW(ulam_terms(SequenceSpec::ulam(1, 1, 10)), ArgumentError);
  EXPECT_THROW(ulam_terms(SequenceSpec::ulam(3, 2, 10)), ArgumentError);
  EXPECT_THROW(ulam_terms(SequenceSpec::ulam(0, 2, 10)), ArgumentError);
  EXPECT_THROW(ulam_terms(SequenceSpec::ulam(1, 2, 1)), ArgumentError);
  SequenceSpec none;
  EXPECT_THROW(ulam_terms(none), ArgumentError);
}

TEST(Ulam, MemoryCapIsEnforced) {
  GenerationOptions tight{1024};
  try {
    ulam_terms(SequenceSpec::ulam(1, 2, 100000), tight);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("1024"), std::string::npos);
  }
}

// Several sieve windows of 65536 candidates, checked against a pair-count table.
TEST(Ulam, WindowBoundariesAreSeamless) {
  for (const auto [a, b, limit] : {std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>{1, 2, 300000},
                                   {2, 3, 300000}, {3, 65537, 200000}}) {
    EXPECT_EQ(ulam_terms(by_limit(a, b, limit)).terms, oracle::ulam_up_to(a, b, limit)) << a << "," << b;
  }
}

TEST(Generate, DispatchesOnFamily) {
  SequenceSpec s;
  s.family = Family::stern;
  s.count = 5;
  EXPECT_EQ(generate(s).terms, (std::vector<std::uint64_t>{0, 1, 1, 2, 1}));
  s.family = Family::synthetic;
  EXPECT_THROW(generate(s), ArgumentError);
  s.alpha_star = 2.0;
  EXPECT_EQ(generate(s).terms.size(), 5u);
}
