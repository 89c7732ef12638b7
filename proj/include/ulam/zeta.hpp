#pragma once

// Ordinates of nontrivial zeta zeros read from a plain-text list, and the
// band statistics of alpha * t_n modulo 2*pi.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ulam/distribution.hpp"
#include "ulam/error.hpp"
#include "ulam/numeric.hpp"

namespace ulam {

struct ZeroList {
  std::vector<double> ordinates;
  std::string source;

  std::size_t count() const { return ordinates.size(); }
};

// One ordinate per line; blank lines and lines starting with '#' are skipped.
inline ZeroList parse_zeros(std::istream& in, const std::string& source) {
  ZeroList zeros;
  zeros.source = source;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double t = 0.0;
    std::string rest;
    if (!(fields >> t) || (fields >> rest) || !std::isfinite(t) || t <= 0.0) {
      throw ParseError(source, line_no, "expected one positive ordinate, got '" + line + "'");
    }
    if (!zeros.ordinates.empty() && t <= zeros.ordinates.back()) {
      throw DataError(source + ":" + std::to_string(line_no) + ": ordinate " + line +
                      " does not increase");
    }
    zeros.ordinates.push_back(t);
  }
  if (zeros.ordinates.empty()) throw DataError(source + ": no ordinates");
  return zeros;
}

inline ZeroList load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open zero list " + path);
  return parse_zeros(in, path);
}

// Phases within this distance (radians) of a band edge are reported.
inline constexpr double kBandEdgeWarning = 1e-7;

struct BandCount {
  std::uint64_t count = 0;
  // 0-based indices of ordinates whose phase lies near pi/2 or 3*pi/2.
  std::vector<std::size_t> near_edge;
};

inline BandCount band_count_report(const ZeroList& zeros, const Frequency& alpha) {
  const PhaseReducer reducer(alpha);
  BandCount out;
  const double edge_turns = kBandEdgeWarning / kTwoPiHi;
  for (std::size_t i = 0; i < zeros.ordinates.size(); ++i) {
    const double s = reducer.turns(zeros.ordinates[i]);
    out.count += detail::in_band_turns(s);
    if (std::fabs(s - 0.25) < edge_turns || std::fabs(s - 0.75) < edge_turns) out.near_edge.push_back(i);
  }
  return out;
}

// #{n : alpha * t_n mod 2*pi in [pi/2, 3*pi/2]}.
inline std::uint64_t band_count(const ZeroList& zeros, const Frequency& alpha) {
  return band_count_report(zeros, alpha).count;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// -(t_N / 2*pi) * log p / sqrt(log p^m). The classical form of this leading
// term carries p^(m/2) in the denominator instead; reports flag the difference.
inline double landau_term(std::uint64_t p, std::uint64_t m, double t_n) {
  if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
  if (m < 1) throw ArgumentError("landau_term needs m >= 1");
  const double log_p = std::log(static_cast<double>(p));
  return -(t_n / (2.0 * std::numbers::pi)) * log_p / std::sqrt(static_cast<double>(m) * log_p);
}

// -(t_N / 2*pi) * log p / p^(m/2), the classical leading term.
inline double landau_term_classical(std::uint64_t p, std::uint64_t m, double t_n) {
  if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
  if (m < 1) throw ArgumentError("landau_term_classical needs m >= 1");
  const double log_p = std::log(static_cast<double>(p));
  return -(t_n / (2.0 * std::numbers::pi)) * log_p / std::pow(static_cast<double>(p), 0.5 * static_cast<double>(m));
}

// Decomposes n = p^m for prime p, if possible.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint64_t m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    if (n != 1) return std::nullopt;
    return std::pair{p, m};
  }
  return std::pair{n, std::uint64_t{1}};
}

}  // namespace ulam
