#pragma once

// Decimal and symbolic frequency strings, split exactly into high + low
// doubles so that no precision is lost between the command line and the
// reduction kernels.

#include <cctype>
#include <cstdint>
#include <string>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ulam/error.hpp"
#include "ulam/numeric.hpp"

namespace ulam {

namespace detail {

using WideReal = boost::multiprecision::cpp_bin_float_100;

inline Frequency split(const WideReal& x) {
  const double hi = static_cast<double>(x);
  const double lo = static_cast<double>(WideReal(x - hi));
  return normalize(hi, lo);
}

inline bool is_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  bool digits = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, digits = true;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, digits = true;
  }
  if (!digits) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    bool exp_digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, exp_digits = true;
    if (!exp_digits) return false;
  }
  return i == s.size();
}

}  // namespace detail

// Accepts a decimal literal ("2.5714474995") or "log:K" for the natural
// logarithm of a positive integer K.
inline Frequency parse_frequency(std::string_view text) {
  if (text.starts_with("log:")) {
    const std::string_view arg = text.substr(4);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ArgumentError("log: frequency needs a positive integer, got '" + std::string(text) + "'");
    }
    const detail::WideReal k{std::string(arg)};
    if (k < 1) throw ArgumentError("log: frequency needs a positive integer");
    return detail::split(boost::multiprecision::log(k));
  }
  if (!detail::is_decimal(text)) {
    throw ArgumentError("cannot parse frequency '" + std::string(text) + "'");
  }
  return detail::split(detail::WideReal(std::string(text)));
}

// Integer K of a "log:K" frequency string, if that is its form.
inline std::optional<std::uint64_t> log_argument(std::string_view text) {
  if (!text.starts_with("log:")) return std::nullopt;
  try {
    return std::stoull(std::string(text.substr(4)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace ulam
