#pragma once

// Comparison sequences: Stern's diatomic sequence and the greedy sequences that
// exclude sums of consecutive earlier terms (MacMahon's segmented numbers and
// Lagarias' two-or-three variant).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "ulam/error.hpp"
#include "ulam/sequence.hpp"

namespace ulam {

// a_0 .. a_{count-1} with a_0 = 0, a_1 = 1, a_{2k} = a_k, a_{2k+1} = a_k + a_{k+1}.
inline SequenceData stern_terms(std::uint64_t count) {
  if (count < 2) throw ArgumentError("stern_terms needs count >= 2");
  SequenceData out;
  out.spec.family = Family::stern;
  out.spec.count = count;
  out.terms.resize(count);
  out.terms[0] = 0;
  out.terms[1] = 1;
  for (std::uint64_t n = 2; n < count; ++n) {
    const std::uint64_t k = n / 2;
    out.terms[n] = (n % 2 == 0) ? out.terms[k] : out.terms[k] + out.terms[k + 1];
  }
  out.generated_up_to = *std::max_element(out.terms.begin(), out.terms.end());
  return out;
}

// Lengths of the consecutive runs whose sums are excluded.
struct RunSumRule {
  std::uint64_t min_run = 2;
  std::optional<std::uint64_t> max_run;  // nullopt: unbounded

  static RunSumRule unbounded() { return {2, std::nullopt}; }
  static RunSumRule up_to_three() { return {2, 3}; }

  void validate() const {
    if (min_run != 2) throw ArgumentError("run-sum rule must start at runs of length 2");
    if (max_run && *max_run != 3) throw ArgumentError("run-sum rule max_run must be 3 or unbounded");
  }

  bool allows(std::uint64_t length) const {
    return length >= min_run && (!max_run || length <= *max_run);
  }
};

namespace detail {

// A run terms[start..end] whose sum is still pending; extending it to the left
// by one term gives the next candidate sum for the same end index.
struct PendingRun {
  std::uint64_t sum;
  std::size_t start;
  std::size_t end;

  friend bool operator>(const PendingRun& a, const PendingRun& b) { return a.sum > b.sum; }
};

}  // namespace detail

// Greedy sequence from 1, 2: n is appended unless it is the sum of a run of
// consecutive chosen terms whose length the rule allows. Forbidden sums live
// in a min-heap keyed by sum; each entry produces the next longer run ending at
// the same term when it is popped, so sums are generated lazily in increasing
// order and never rescanned.
inline SequenceData run_sum_excluded_terms(const RunSumRule& rule, std::uint64_t count) {
  rule.validate();
  if (count < 2) throw ArgumentError("run_sum_excluded_terms needs count >= 2");

  SequenceData out;
  out.spec.family = rule.max_run ? Family::lagarias : Family::macmahon;
  out.spec.count = count;
  auto& terms = out.terms;
  terms.reserve(count);

  std::priority_queue<detail::PendingRun, std::vector<detail::PendingRun>, std::greater<>> pending;
  const auto push_extension = [&](std::uint64_t sum, std::size_t start, std::size_t end) {
    if (start == 0) return;
    const std::uint64_t length = end - start + 2;
    if (!rule.allows(length)) return;
    pending.push({sum + terms[start - 1], start - 1, end});
  };

  for (std::uint64_t n = 1; terms.size() < count; ++n) {
    bool forbidden = false;
    while (!pending.empty() && pending.top().sum <= n) {
      const auto run = pending.top();
      pending.pop();
      forbidden = forbidden || run.sum == n;
      push_extension(run.sum, run.start, run.end);
    }
    if (forbidden) continue;
    terms.push_back(n);
    push_extension(n, terms.size() - 1, terms.size() - 1);
    // Every run ending at the new term exceeds it, so no decision below n is
    // ever revisited.
    if (!pending.empty() && pending.top().sum <= n) {
      throw Error("run-sum bookkeeping produced a sum not above the current term");
    }
  }
  out.generated_up_to = terms.back();
  return out;
}

inline Fraction parity_fraction(const SequenceData& data) {
  if (data.terms.empty()) throw PreconditionError("parity_fraction needs a nonempty sequence");
  const auto even = std::count_if(data.terms.begin(), data.terms.end(),
                                  [](std::uint64_t t) { return t % 2 == 0; });
  return {static_cast<std::uint64_t>(even), data.terms.size()};
}

}  // namespace ulam
