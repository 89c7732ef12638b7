#pragma once

// Eventual periodicity of consecutive differences, and the even-term census.
// A finite window can only ever support a verdict "periodic within the data";
// reports carry the confirmation count so callers can pick their own bar.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ulam/error.hpp"
#include "ulam/sequence.hpp"

namespace ulam {

inline constexpr std::uint64_t kDefaultConfirmations = 3;

struct PeriodicityReport {
  bool periodic = false;
  std::optional<std::uint64_t> preperiod;
  std::optional<std::uint64_t> period;
  // Full periods in the verified tail beyond the first one.
  std::uint64_t confirmations = 0;
  std::vector<std::uint64_t> even_terms;
};

inline std::vector<std::uint64_t> diffs(std::span<const std::uint64_t> terms) {
  if (terms.size() < 2) throw PreconditionError("diffs needs at least 2 terms");
  std::vector<std::uint64_t> d(terms.size() - 1);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (terms[i + 1] <= terms[i]) throw PreconditionError("diffs needs strictly increasing terms");
    d[i] = terms[i + 1] - terms[i];
  }
  return d;
}

inline std::vector<std::uint64_t> diffs(const SequenceData& data) {
  return diffs(std::span<const std::uint64_t>(data.terms));
}

inline std::vector<std::uint64_t> even_census(std::span<const std::uint64_t> terms) {
  std::vector<std::uint64_t> out;
  for (const auto t : terms) {
    if (t % 2 == 0) out.push_back(t);
  }
  return out;
}

inline std::vector<std::uint64_t> even_census(const SequenceData& data) {
  return even_census(std::span<const std::uint64_t>(data.terms));
}

namespace detail {

// z[i] = length of the longest common prefix of s and s[i..].
inline std::vector<std::size_t> z_function(std::span<const std::uint64_t> s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

// Smallest m with d[n + p] == d[n] for all m <= n < |d| - p.
inline std::size_t tail_start(std::span<const std::uint64_t> d, std::size_t p) {
  std::size_t m = d.size() - p;
  while (m > 0 && d[m - 1] == d[m - 1 + p]) --m;
  return m;
}

}  // namespace detail

// Smallest period p with the longest matching tail, requiring at least
// min_confirmations repeats of the period beyond the first. On the reversed
// sequence e, a tail of d with period p is a prefix of e with period p, whose
// maximal length is p + z[p]; all periods come out of one Z-function pass and
// the chosen one is re-verified directly.
inline PeriodicityReport detect_period(std::span<const std::uint64_t> d,
                                       std::uint64_t min_confirmations = kDefaultConfirmations) {
  if (d.empty()) throw PreconditionError("detect_period needs a nonempty difference list");
  if (min_confirmations < 3) throw ArgumentError("min_confirmations must be at least 3");
  PeriodicityReport report;
  const std::size_t n = d.size();
  std::vector<std::uint64_t> rev(d.rbegin(), d.rend());
  const auto z = detail::z_function(rev);
  for (std::size_t p = 1; (min_confirmations + 1) * p <= n; ++p) {
    const std::size_t tail = p + z[p];
    if (tail < (min_confirmations + 1) * p) continue;
    const std::size_t m = n - tail;
    if (detail::tail_start(d, p) != m) throw Error("period search disagrees with direct verification");
    report.periodic = true;
    report.period = p;
    report.preperiod = m;
    report.confirmations = tail / p - 1;
    break;
  }
  return report;
}

inline PeriodicityReport detect_period(const SequenceData& data,
                                       std::uint64_t min_confirmations = kDefaultConfirmations) {
  const auto d = diffs(data);
  auto report = detect_period(std::span<const std::uint64_t>(d), min_confirmations);
  report.even_terms = even_census(data);
  return report;
}

}  // namespace ulam
