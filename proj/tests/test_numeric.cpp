#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ulam/frequency_parse.hpp"
#include "ulam/numeric.hpp"

using namespace ulam;

TEST(ErrorFreeTransforms, TwoSumIsExact) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng), b = u(rng) * 1e-9;
    const auto s = two_sum(a, b);
    EXPECT_EQ(oracle::Wide(s.hi) + oracle::Wide(s.lo), oracle::Wide(a) + oracle::Wide(b));
  }
}

TEST(ErrorFreeTransforms, TwoProdIsExact) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1e8, 1e8);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng), b = u(rng);
    const auto p = two_prod(a, b);
    EXPECT_EQ(oracle::Wide(p.hi) + oracle::Wide(p.lo), oracle::Wide(a) * oracle::Wide(b));
  }
}

TEST(TwoPiLimbs, AgreeWithWidePi) {
  const oracle::Wide limbs = oracle::Wide(kTwoPiHi) + oracle::Wide(kTwoPiMid) + oracle::Wide(kTwoPiLo);
  EXPECT_LT(static_cast<double>(abs(limbs - oracle::two_pi())), 1e-45);
}

TEST(PhaseReducer, MatchesWideReferenceOnRandomCases) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> term(1, kReductionTermCap);
  std::uniform_real_distribution<double> freq(1e-3, 2 * std::numbers::pi);
  double worst = 0;
  for (int i = 0; i < 2000; ++i) {
    const Frequency f = normalize(freq(rng), freq(rng) * 1e-17);
    const auto t = term(rng);
    const double got = reduce_mod_2pi(t, f);
    ASSERT_GE(got, 0.0);
    ASSERT_LT(got, 2 * std::numbers::pi);
    worst = std::max(worst, oracle::circle_distance(got, oracle::reduce(static_cast<double>(t), f.high, f.low)));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(PhaseReducer, CosMatchesWideReference) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<std::uint64_t> term(1, 1'000'000'000);
  const Frequency f{2.5714474995};
  const PhaseReducer r(f);
  for (int i = 0; i < 500; ++i) {
    const double t = static_cast<double>(term(rng));
    EXPECT_NEAR(r.cos(t), oracle::cos_reduced(t, f.high, f.low), 1e-12);
  }
}

TEST(PhaseReducer, RealValuedTerms) {
  const Frequency f{std::log(2.0)};
  const PhaseReducer r(f);
  for (const double t : {14.134725142, 21.022039639, 74920.827498994}) {
    EXPECT_LT(oracle::circle_distance(r.radians(t), oracle::reduce(t, f.high, f.low)), 1e-12);
  }
}

TEST(PhaseReducer, RejectsTermsAboveCap) {
  EXPECT_THROW(reduce_mod_2pi(kReductionTermCap + 1, Frequency{1.0}), ArgumentError);
  EXPECT_NO_THROW(reduce_mod_2pi(kReductionTermCap, Frequency{1.0}));
}

TEST(FrequencyOps, ScaleAndMirror) {
  const Frequency f = parse_frequency("2.5714474995");
  const oracle::Wide x = oracle::Wide(f.high) + oracle::Wide(f.low);
  const Frequency f5 = scale(f, 5);
  EXPECT_LT(static_cast<double>(abs(oracle::Wide(f5.high) + oracle::Wide(f5.low) - 5 * x)), 1e-30);
  const Frequency m = mirror(f);
  EXPECT_LT(static_cast<double>(abs(oracle::Wide(m.high) + oracle::Wide(m.low) - (oracle::two_pi() - x))), 1e-30);
}

TEST(CompensatedSum, MatchesWideSum) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(20000);
    for (auto& x : v) x = u(rng);
    CompensatedSum s;
    for (const double x : v) s.add(x);
    EXPECT_NEAR(s.value(), oracle::wide_sum(v), 1e-12);
  }
}

// A million cosines of reduced phases: reference reduces and accumulates in
// 200 bits, only the cosine itself is taken in double.
TEST(CompensatedSum, MillionCosines) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::uint64_t> term(1, std::uint64_t{1} << 40);
  std::uniform_real_distribution<double> freq(0.1, 6.2);
  const double x = freq(rng);
  const PhaseReducer reducer{Frequency{x}};
  CompensatedSum s;
  oracle::Wide ref = 0;
  for (int i = 0; i < 1'000'000; ++i) {
    const auto t = term(rng);
    s.add(reducer.cos(static_cast<double>(t)));
    ref += std::cos(static_cast<double>(oracle::reduce(static_cast<double>(t), x, 0.0)));
  }
  EXPECT_NEAR(s.value(), static_cast<double>(ref), 1e-9);
}

TEST(CompensatedSum, IllConditioned) {
  CompensatedSum s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  EXPECT_EQ(s.value(), 1.0);
}

TEST(ChunkedSum, IndependentOfThreadCount) {
  std::vector<double> v(100'003);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& x : v) x = u(rng);
  const auto id = [](double x) { return x; };
  const double one = chunked_sum(std::span<const double>(v), 1, id);
  for (unsigned t : {2u, 3u, 7u}) EXPECT_EQ(chunked_sum(std::span<const double>(v), t, id), one);
  EXPECT_NEAR(one, oracle::wide_sum(v), 1e-11);
}

TEST(ParseFrequency, DecimalSplitsExactly) {
  const Frequency f = parse_frequency("2.57144749846");
  const oracle::Wide want("2.57144749846");
  EXPECT_LT(static_cast<double>(abs(oracle::Wide(f.high) + oracle::Wide(f.low) - want)), 1e-31);
  EXPECT_NE(f.low, 0.0);
}

TEST(ParseFrequency, LogForm) {
  const Frequency f = parse_frequency("log:5");
  EXPECT_DOUBLE_EQ(f.high, std::log(5.0));
  EXPECT_LT(static_cast<double>(abs(oracle::Wide(f.high) + oracle::Wide(f.low) - log(oracle::Wide(5)))), 1e-31);
  EXPECT_EQ(log_argument("log:11"), std::optional<std::uint64_t>(11));
  EXPECT_EQ(log_argument("2.5"), std::nullopt);
}

TEST(ParseFrequency, RejectsGarbage) {
  for (const char* bad : {"", "abc", "2.5x", "log:", "log:-3", "log:2.5", "1e", "--1"}) {
    EXPECT_THROW(parse_frequency(bad), ArgumentError) << bad;
  }
  EXPECT_THROW(parse_frequency("log:0"), ArgumentError);
}
