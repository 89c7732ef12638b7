#pragma once

// Normalized cosine sums f(x) = (1/N) sum_n cos(a_n x): point evaluation, grid
// scans, staged peak refinement and the coefficient table at multiples of a
// peak frequency.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ulam/distribution.hpp"
#include "ulam/error.hpp"
#include "ulam/generate.hpp"
#include "ulam/numeric.hpp"
#include "ulam/sequence.hpp"

namespace ulam {

struct SpectrumGrid {
  std::vector<double> x_values;
  std::vector<double> values;
  std::uint64_t n_terms = 0;
};

struct ScanOptions {
  std::size_t point_budget = std::size_t{1} << 24;
  unsigned threads = 1;
};

namespace detail {

inline double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

template <typename T>
void check_terms(std::span<const T> terms) {
  if (terms.empty()) throw PreconditionError("cosine sum over an empty term list");
  check_reducible(terms);
}

template <typename T>
double max_term(std::span<const T> terms) {
  return static_cast<double>(*std::max_element(terms.begin(), terms.end()));
}

inline constexpr std::size_t kGridBlock = 256;
inline constexpr std::size_t kLanes = 8;

// Sums cos(t * (x0 + j * step)) over all terms for j in [0, npoints), npoints
// <= kGridBlock. Each term's phasor is seeded from an exact reduction at x0
// and advanced by complex multiplication with its step phasor; kLanes terms
// run side by side. Per-point totals use Kahan compensation.
template <typename T>
void accumulate_block(std::span<const T> terms, double x0, double step, std::size_t npoints,
                      double* out) {
  const PhaseReducer seed(Frequency{x0});
  const PhaseReducer stride(Frequency{step});
  std::array<double, kGridBlock> sum{};
  std::array<double, kGridBlock> comp{};
  std::array<double, kLanes> zr{}, zi{}, wr{}, wi{};

  const auto add_point = [&](std::size_t j, double v) {
    const double y = v - comp[j];
    const double t = sum[j] + y;
    comp[j] = (t - sum[j]) - y;
    sum[j] = t;
  };

  std::size_t i = 0;
  for (; i + kLanes <= terms.size(); i += kLanes) {
    for (std::size_t l = 0; l < kLanes; ++l) {
      const double t = static_cast<double>(terms[i + l]);
      const double a = seed.turns(t) * kTwoPiHi;
      const double b = stride.turns(t) * kTwoPiHi;
      zr[l] = std::cos(a);
      zi[l] = std::sin(a);
      wr[l] = std::cos(b);
      wi[l] = std::sin(b);
    }
    for (std::size_t j = 0; j < npoints; ++j) {
      double v = 0.0;
      for (std::size_t l = 0; l < kLanes; ++l) v += zr[l];
      add_point(j, v);
      for (std::size_t l = 0; l < kLanes; ++l) {
        const double r = zr[l] * wr[l] - zi[l] * wi[l];
        const double m = zr[l] * wi[l] + zi[l] * wr[l];
        zr[l] = r;
        zi[l] = m;
      }
    }
  }
  for (; i < terms.size(); ++i) {
    const double t = static_cast<double>(terms[i]);
    const double a = seed.turns(t) * kTwoPiHi;
    const double b = stride.turns(t) * kTwoPiHi;
    double cr = std::cos(a), ci = std::sin(a);
    const double sr = std::cos(b), si = std::sin(b);
    for (std::size_t j = 0; j < npoints; ++j) {
      add_point(j, cr);
      const double r = cr * sr - ci * si;
      ci = cr * si + ci * sr;
      cr = r;
    }
  }
  for (std::size_t j = 0; j < npoints; ++j) out[j] = sum[j] + (-comp[j]);
}

// Normalized sums on the grid x0 + k * step, k in [0, npoints). Work is split
// into blocks of kGridBlock points; each block is computed independently, so
// the values do not depend on the thread count.
template <typename T>
SpectrumGrid evaluate_grid(std::span<const T> terms, double x0, double step, std::size_t npoints,
                           unsigned threads) {
  SpectrumGrid grid;
  grid.n_terms = terms.size();
  grid.x_values.resize(npoints);
  grid.values.resize(npoints);
  const std::size_t blocks = (npoints + kGridBlock - 1) / kGridBlock;
  const double inv_n = 1.0 / static_cast<double>(terms.size());
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t k0 = b * kGridBlock;
    const std::size_t n = std::min(kGridBlock, npoints - k0);
    const double xb = x0 + static_cast<double>(k0) * step;
    accumulate_block(terms, xb, step, n, grid.values.data() + k0);
    for (std::size_t j = 0; j < n; ++j) {
      grid.x_values[k0 + j] = xb + static_cast<double>(j) * step;
      grid.values[k0 + j] = clamp_unit(grid.values[k0 + j] * inv_n);
    }
  });
  return grid;
}

}  // namespace detail

// (1/N) sum_n cos(terms[n] * x) with exact phase reduction per term and
// chunked compensated accumulation.
template <typename T>
double cosine_sum(std::span<const T> terms, const Frequency& x, unsigned threads = 1) {
  if (!std::isfinite(x.high) || !std::isfinite(x.low)) throw ArgumentError("non-finite frequency");
  detail::check_terms(terms);
  const PhaseReducer reducer(x);
  const double s = chunked_sum(terms, threads,
                               [&](T t) { return reducer.cos(static_cast<double>(t)); });
  return detail::clamp_unit(s / static_cast<double>(terms.size()));
}

inline double cosine_sum(const SequenceData& data, const Frequency& x, unsigned threads = 1) {
  return cosine_sum(std::span<const std::uint64_t>(data.terms), x, threads);
}

// Grid xmin, xmin + step, ... up to xmax.
template <typename T>
SpectrumGrid scan(std::span<const T> terms, double xmin, double xmax, double step,
                  const ScanOptions& options = {}) {
  if (!(std::isfinite(xmin) && std::isfinite(xmax) && std::isfinite(step))) {
    throw ArgumentError("scan bounds must be finite");
  }
  if (!(xmin >= 0.0 && xmin < xmax && xmax <= 2.0 * std::numbers::pi)) {
    throw ArgumentError("scan needs 0 <= xmin < xmax <= 2*pi");
  }
  if (!(step > 0.0)) throw ArgumentError("scan step must be positive");
  detail::check_terms(terms);
  const double span_points = std::floor((xmax - xmin) / step) + 1.0;
  if (span_points > static_cast<double>(options.point_budget)) {
    throw ResourceError("scan grid of " + std::to_string(span_points) +
                        " points exceeds the point budget of " +
                        std::to_string(options.point_budget));
  }
  auto npoints = static_cast<std::size_t>(span_points);
  // Guard against the last point overshooting xmax through rounding.
  while (npoints > 1 && xmin + static_cast<double>(npoints - 1) * step > xmax) --npoints;
  return detail::evaluate_grid(terms, xmin, step, npoints, options.threads);
}

struct PeakStage {
  std::uint64_t n_terms = 0;
  double bracket_width = 0.0;
};

struct PeakEstimate {
  double alpha = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  double peak_value = 0.0;
  std::uint64_t n_terms_final = 0;
  std::vector<PeakStage> stages;
};

struct RefineOptions {
  // Sub-grid size floor per stage.
  std::size_t min_points = 1024;
  // Minimum shrink factor of the bracket between stages.
  double shrink = 32.0;
  // Grid points per 1/max(a_n): the sum is a trigonometric polynomial whose
  // features are no narrower than about 1/max(a_n).
  double resolution = 4.0;
  // The next bracket spans at most this many sub-grid spacings, and at least
  // this many resolution cells of the current stage.
  double zoom_spacings = 64.0;
  // Final bracket width in sub-grid spacings.
  double safety = 4.0;
  std::size_t point_budget = std::size_t{1} << 22;
  unsigned threads = 1;
};

// Staged zoom onto the extremum of |f| inside seed. Stage j uses the first
// schedule[j] terms on a sub-grid fine enough to resolve them, re-centres the
// bracket on the extremum and shrinks it.
template <typename T>
PeakEstimate refine_peak(std::span<const T> terms, std::pair<double, double> seed,
                         std::span<const std::uint64_t> schedule, const RefineOptions& options = {}) {
  if (schedule.empty()) throw ArgumentError("refine_peak needs a nonempty schedule");
  for (std::size_t j = 1; j < schedule.size(); ++j) {
    if (schedule[j] <= schedule[j - 1]) throw ArgumentError("refine schedule must be strictly increasing");
  }
  if (schedule.front() < 1) throw ArgumentError("refine schedule sizes must be positive");
  if (schedule.back() > terms.size()) {
    throw ArgumentError("refine schedule needs " + std::to_string(schedule.back()) +
                        " terms but only " + std::to_string(terms.size()) + " are available");
  }
  auto [lo, hi] = seed;
  if (!(std::isfinite(lo) && std::isfinite(hi) && 0.0 <= lo && lo < hi)) {
    throw ArgumentError("seed bracket must satisfy 0 <= lo < hi");
  }
  detail::check_terms(terms.first(schedule.back()));

  PeakEstimate est;
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    const auto sub = terms.first(schedule[j]);
    const double width = hi - lo;
    const double target = 1.0 / (options.resolution * detail::max_term(sub));
    const double wanted = std::ceil(width / target) + 1.0;
    if (wanted > static_cast<double>(options.point_budget)) {
      throw ResourceError("refine stage " + std::to_string(j) + " needs " + std::to_string(wanted) +
                          " grid points, above the budget of " + std::to_string(options.point_budget));
    }
    const std::size_t points = std::max(options.min_points, static_cast<std::size_t>(wanted));
    const double spacing = width / static_cast<double>(points - 1);
    const auto grid = detail::evaluate_grid(sub, lo, spacing, points, options.threads);

    std::size_t best = 0;
    for (std::size_t k = 1; k < points; ++k) {
      if (std::fabs(grid.values[k]) > std::fabs(grid.values[best])) best = k;
    }
    if (best == 0 || best + 1 == points) throw BracketEscapeError(j, lo, hi, grid.x_values[best]);
    const double centre = grid.x_values[best];

    if (j + 1 < schedule.size()) {
      // The peak of a shorter prefix can drift by about one resolution cell
      // once more terms are added, so the bracket never shrinks below that.
      const double floor_width = options.zoom_spacings * target;
      const double next =
          std::min(width, std::max(std::min(width / options.shrink, options.zoom_spacings * spacing), floor_width));
      lo = centre - next / 2;
      hi = centre + next / 2;
      est.stages.push_back({schedule[j], next});
    } else {
      // Vertex of the parabola through the extremum and its neighbours.
      const double fm = std::fabs(grid.values[best - 1]);
      const double f0 = std::fabs(grid.values[best]);
      const double fp = std::fabs(grid.values[best + 1]);
      const double curvature = fm - 2 * f0 + fp;
      double offset = curvature < 0 ? 0.5 * (fm - fp) / curvature : 0.0;
      offset = std::clamp(offset, -0.5, 0.5);
      const double alpha = centre + offset * spacing;
      const double final_width = options.safety * spacing;
      est.alpha = alpha;
      est.bracket = {alpha - final_width / 2, alpha + final_width / 2};
      est.stages.push_back({schedule[j], final_width});
      est.n_terms_final = schedule[j];
      est.peak_value = cosine_sum(sub, Frequency{alpha});
    }
  }
  return est;
}

inline PeakEstimate refine_peak(const SequenceSpec& spec, std::pair<double, double> seed,
                                std::span<const std::uint64_t> schedule,
                                const RefineOptions& options = {},
                                const GenerationOptions& generation = {}) {
  if (schedule.empty()) throw ArgumentError("refine_peak needs a nonempty schedule");
  SequenceSpec s = spec;
  s.count = *std::max_element(schedule.begin(), schedule.end());
  s.limit.reset();
  const auto data = generate(s, generation);
  return refine_peak(std::span<const std::uint64_t>(data.terms), seed, schedule, options);
}

// Seed bracket from a full-resolution scan of (0, pi] over the first n terms:
// step 2*pi / (8 * max term), skipping the main lobe at the origin.
template <typename T>
std::pair<double, double> default_seed_bracket(std::span<const T> terms, std::size_t n = 10000,
                                               const ScanOptions& options = {}) {
  const auto sub = terms.first(std::min(n, terms.size()));
  detail::check_terms(sub);
  const double a_max = detail::max_term(sub);
  const double step = 2.0 * std::numbers::pi / (8.0 * a_max);
  const double xmin = std::min(64.0 / a_max, 0.5);
  const auto grid = scan(sub, xmin, std::numbers::pi, step, options);
  std::size_t best = 0;
  for (std::size_t k = 1; k < grid.values.size(); ++k) {
    if (std::fabs(grid.values[k]) > std::fabs(grid.values[best])) best = k;
  }
  const double c = grid.x_values[best];
  return {std::max(0.0, c - 4 * step), c + 4 * step};
}

struct CoeffTable {
  double alpha = 0.0;
  std::vector<double> coeffs;
};

// c_ell = (1/N) sum_n cos(ell * alpha * a_n); negative ell allowed.
template <typename T>
double coefficient(std::span<const T> terms, const Frequency& alpha, std::int64_t ell) {
  return cosine_sum(terms, scale(alpha, ell));
}

template <typename T>
CoeffTable coeff_table(std::span<const T> terms, const Frequency& alpha, std::int64_t lmax,
                       unsigned threads = 1) {
  if (lmax < 0) throw ArgumentError("coeff_table needs lmax >= 0");
  detail::check_terms(terms);
  CoeffTable table;
  table.alpha = alpha.value();
  table.coeffs.resize(static_cast<std::size_t>(lmax) + 1);
  parallel_for(table.coeffs.size(), threads, [&](std::size_t ell) {
    table.coeffs[ell] = coefficient(terms, alpha, static_cast<std::int64_t>(ell));
  });
  return table;
}

}  // namespace ulam
