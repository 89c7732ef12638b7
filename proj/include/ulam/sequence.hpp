#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ulam/error.hpp"

namespace ulam {

enum class Family { ulam, stern, macmahon, lagarias, synthetic };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::ulam: return "ulam";
    case Family::stern: return "stern";
    case Family::macmahon: return "macmahon";
    case Family::lagarias: return "lagarias";
    case Family::synthetic: return "synthetic";
  }
  return "ulam";
}

inline Family family_from_string(std::string_view s) {
  if (s == "ulam") return Family::ulam;
  if (s == "stern") return Family::stern;
  if (s == "macmahon") return Family::macmahon;
  if (s == "lagarias") return Family::lagarias;
  if (s == "synthetic") return Family::synthetic;
  throw ArgumentError("unknown sequence family '" + std::string(s) + "'");
}

// Recipe for a sequence. Generation stops at whichever of count / limit is hit
// first.
struct SequenceSpec {
  Family family = Family::ulam;
  std::pair<std::uint64_t, std::uint64_t> init{1, 2};
  std::optional<std::uint64_t> count;
  std::optional<std::uint64_t> limit;
  // Target frequency of the synthetic family.
  std::optional<double> alpha_star;

  void validate() const {
    if (!count && !limit) throw ArgumentError("sequence spec needs a count or a limit");
    if (count && *count < 2) throw ArgumentError("count must be at least 2");
    if (family == Family::ulam) {
      if (init.first < 1) throw ArgumentError("initial values must be positive");
      if (init.first >= init.second) {
        throw ArgumentError("initial values must be strictly increasing, got " +
                            std::to_string(init.first) + "," + std::to_string(init.second));
      }
    }
    if (family == Family::synthetic && !alpha_star) {
      throw ArgumentError("synthetic family needs alpha_star");
    }
    if (family != Family::ulam && family != Family::synthetic && !count) {
      throw ArgumentError(std::string(to_string(family)) + " sequences are generated by count");
    }
  }

  static SequenceSpec ulam(std::uint64_t a1, std::uint64_t a2, std::uint64_t count) {
    SequenceSpec s;
    s.init = {a1, a2};
    s.count = count;
    return s;
  }
};

// Materialized terms. Increasing for every family except stern.
struct SequenceData {
  SequenceSpec spec;
  std::vector<std::uint64_t> terms;
  // Largest integer whose membership has been decided.
  std::uint64_t generated_up_to = 0;

  std::size_t size() const { return terms.size(); }
};

struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

// Exact view of the first n terms (copy; SequenceData is a value type).
inline SequenceData prefix(const SequenceData& data, std::size_t n) {
  if (n > data.terms.size()) {
    throw ArgumentError("prefix of " + std::to_string(n) + " terms requested from a sequence of " +
                        std::to_string(data.terms.size()));
  }
  SequenceData out;
  out.spec = data.spec;
  out.spec.count = n;
  out.terms.assign(data.terms.begin(), data.terms.begin() + static_cast<std::ptrdiff_t>(n));
  if (n == data.terms.size()) {
    out.generated_up_to = data.generated_up_to;
  } else if (n > 0) {
    out.generated_up_to = *std::max_element(out.terms.begin(), out.terms.end());
  }
  return out;
}

}  // namespace ulam
