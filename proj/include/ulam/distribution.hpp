#pragma once

// Empirical distribution of alpha * a_n modulo 2*pi.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "ulam/error.hpp"
#include "ulam/numeric.hpp"
#include "ulam/sequence.hpp"

namespace ulam {

inline constexpr std::size_t kDefaultBins = 4096;

// Phase counts; bin b covers [2*pi*b/B, 2*pi*(b+1)/B).
struct PhaseHistogram {
  std::size_t bins = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t n_total = 0;
  Frequency alpha;
};

namespace detail {

template <typename T>
void check_reducible(std::span<const T> terms) {
  if constexpr (std::is_integral_v<T>) {
    for (const T t : terms) {
      if (static_cast<std::uint64_t>(t) > kReductionTermCap) {
        throw ArgumentError("term " + std::to_string(t) +
                            " exceeds the 2^48 cap of the fast reduction path");
      }
    }
  } else {
    for (const T t : terms) {
      if (!std::isfinite(t)) throw ArgumentError("non-finite term");
    }
  }
}

// Closed band [1/4, 3/4] in turns, i.e. [pi/2, 3*pi/2] in radians.
inline bool in_band_turns(double s) { return s >= 0.25 && s <= 0.75; }

}  // namespace detail

// Phases are binned from their value in turns, so no rounding through radians
// can move a phase across a bin edge.
template <typename T>
PhaseHistogram phase_histogram(std::span<const T> terms, const Frequency& alpha,
                               std::size_t bins = kDefaultBins, unsigned threads = 1) {
  if (bins < 2) throw ArgumentError("phase_histogram needs at least 2 bins");
  detail::check_reducible(terms);
  const PhaseReducer reducer(alpha);
  const std::size_t chunks = (terms.size() + kReductionChunk - 1) / kReductionChunk;
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(chunks, 1))));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(bins, 0));
  parallel_for(workers, workers, [&](std::size_t w) {
    const std::size_t begin = terms.size() * w / workers;
    const std::size_t end = terms.size() * (w + 1) / workers;
    auto& counts = partial[w];
    const double scale = static_cast<double>(bins);
    for (std::size_t i = begin; i < end; ++i) {
      const double s = reducer.turns(static_cast<double>(terms[i]));
      auto b = static_cast<std::size_t>(s * scale);
      if (b >= bins) b = bins - 1;
      ++counts[b];
    }
  });
  PhaseHistogram h;
  h.bins = bins;
  h.alpha = alpha;
  h.counts.assign(bins, 0);
  for (const auto& p : partial) {
    for (std::size_t b = 0; b < bins; ++b) h.counts[b] += p[b];
  }
  h.n_total = terms.size();
  return h;
}

inline PhaseHistogram phase_histogram(const SequenceData& data, const Frequency& alpha,
                                      std::size_t bins = kDefaultBins, unsigned threads = 1) {
  return phase_histogram(std::span<const std::uint64_t>(data.terms), alpha, bins, threads);
}

// Terms t with cos(alpha * t) >= 0, in input order.
inline std::vector<std::uint64_t> sign_exceptions(std::span<const std::uint64_t> terms,
                                                  const Frequency& alpha) {
  detail::check_reducible(terms);
  const PhaseReducer reducer(alpha);
  std::vector<std::uint64_t> out;
  for (const std::uint64_t t : terms) {
    const double s = reducer.turns(static_cast<double>(t));
    if (!(s > 0.25 && s < 0.75)) out.push_back(t);
  }
  return out;
}

// Number of terms whose phase lies in [pi/2, 3*pi/2].
template <typename T>
std::uint64_t band_count(std::span<const T> terms, const Frequency& alpha) {
  detail::check_reducible(terms);
  const PhaseReducer reducer(alpha);
  std::uint64_t n = 0;
  for (const T t : terms) n += detail::in_band_turns(reducer.turns(static_cast<double>(t)));
  return n;
}

// Histogram mass in the bins that make up [pi/2, 3*pi/2); needs bins % 4 == 0.
inline std::uint64_t band_mass(const PhaseHistogram& h) {
  if (h.bins % 4 != 0) throw ArgumentError("band_mass needs a bin count divisible by 4");
  std::uint64_t n = 0;
  for (std::size_t b = h.bins / 4; b < 3 * h.bins / 4; ++b) n += h.counts[b];
  return n;
}

// Pushforward of the histogram under phase -> ell * phase (mod 2*pi). With
// output bins of width 2*pi*ell/B, input bin b lands exactly in output bin
// b mod (B / ell), which is the discrete form of
// (1/ell) * sum_k f((x + 2*pi*k) / ell).
inline PhaseHistogram fold_histogram(const PhaseHistogram& hist, std::uint64_t ell) {
  if (ell < 1) throw ArgumentError("fold_histogram needs ell >= 1");
  if (hist.bins % ell != 0) {
    throw ArgumentError("bin count " + std::to_string(hist.bins) + " is not divisible by ell=" +
                        std::to_string(ell));
  }
  PhaseHistogram out;
  out.bins = hist.bins / ell;
  out.counts.assign(out.bins, 0);
  for (std::size_t b = 0; b < hist.bins; ++b) out.counts[b % out.bins] += hist.counts[b];
  out.n_total = hist.n_total;
  out.alpha = scale(hist.alpha, static_cast<std::int64_t>(ell));
  return out;
}

// Total-variation distance between the normalized histograms.
inline double total_variation(const PhaseHistogram& a, const PhaseHistogram& b) {
  if (a.bins != b.bins) throw ArgumentError("total_variation needs equal bin counts");
  if (a.n_total == 0 || b.n_total == 0) throw ArgumentError("total_variation of an empty histogram");
  double tv = 0.0;
  for (std::size_t i = 0; i < a.bins; ++i) {
    tv += std::fabs(static_cast<double>(a.counts[i]) / static_cast<double>(a.n_total) -
                    static_cast<double>(b.counts[i]) / static_cast<double>(b.n_total));
  }
  return 0.5 * tv;
}

// Integers m = 1, 2, ... whose phase m * alpha_star lies in [pi/2, 3*pi/2].
// Since m * alpha_star equidistributes, about half of the scanned integers
// are kept and the kept phases follow the band indicator density.
inline SequenceData synth_sequence(double alpha_star, std::uint64_t count,
                                   std::uint64_t scan_budget = 0) {
  if (!(alpha_star > 0.0 && alpha_star < 2.0 * std::numbers::pi)) {
    throw ArgumentError("alpha_star must lie in (0, 2*pi)");
  }
  if (count < 1) throw ArgumentError("synth_sequence needs count >= 1");
  if (scan_budget == 0) scan_budget = std::max<std::uint64_t>(std::uint64_t{1} << 20, 64 * count);
  scan_budget = std::min(scan_budget, kReductionTermCap);

  SequenceData out;
  out.spec.family = Family::synthetic;
  out.spec.alpha_star = alpha_star;
  out.spec.count = count;
  out.terms.reserve(count);
  const PhaseReducer reducer(Frequency{alpha_star});
  std::uint64_t m = 0;
  while (out.terms.size() < count) {
    if (++m > scan_budget) {
      throw ConstructionError("synthetic construction kept " + std::to_string(out.terms.size()) +
                              " of " + std::to_string(count) + " terms within a scan budget of " +
                              std::to_string(scan_budget));
    }
    if (detail::in_band_turns(reducer.turns(static_cast<double>(m)))) out.terms.push_back(m);
  }
  out.generated_up_to = m;
  return out;
}

}  // namespace ulam
