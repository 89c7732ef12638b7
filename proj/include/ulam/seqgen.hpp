#pragma once

// Ulam-type sequences for arbitrary initial values.
//
// Every integer above the current term carries a saturating representation
// count in {0, 1, 2+}, packed as two bit planes ("exactly one" and "two or
// more"). Adding a term c to the sum counts of all pairs (b, c), b < c, is a
// shift of the membership bitset by c merged into the planes, 64 integers per
// word operation. The planes only exist for a sliding window just above the
// frontier: when the window is exhausted the next one is filled from every
// term c with 2c above its start, so no count is ever recomputed and the planes
// stay resident in L1.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ulam/error.hpp"
#include "ulam/sequence.hpp"

namespace ulam {

inline constexpr std::uint64_t kDefaultMemoryCap = std::uint64_t{4} << 30;

struct GenerationOptions {
  std::uint64_t memory_cap_bytes = kDefaultMemoryCap;
};

namespace detail {

class UlamSieve {
 public:
  static constexpr std::size_t kWindowWords = 1024;
  static constexpr std::uint64_t kWindowBits = kWindowWords * 64;

  UlamSieve(std::uint64_t a1, std::uint64_t a2, std::uint64_t memory_cap)
      : memory_cap_(memory_cap) {
    add_member(a1);
    add_member(a2);
    terms_ = {a1, a2};
    cursor_ = a2 + 1;
    open_window(cursor_ & ~std::uint64_t{63});
  }

  // Next term if one exists <= limit; otherwise every integer <= limit has
  // been decided and nullopt is returned.
  std::optional<std::uint64_t> next(std::uint64_t limit) {
    for (;;) {
      if (cursor_ > limit) return std::nullopt;
      const std::uint64_t stop = std::min(window_hi_, limit + 1);
      if (auto hit = find_candidate(cursor_, stop)) {
        append(*hit);
        return hit;
      }
      cursor_ = stop;
      if (stop > limit) return std::nullopt;
      open_window(window_hi_);
    }
  }

  const std::vector<std::uint64_t>& terms() const { return terms_; }
  std::vector<std::uint64_t> release_terms() { return std::move(terms_); }

  // Every integer below this has been decided.
  std::uint64_t cursor() const { return cursor_; }

 private:
  void ensure_member_capacity(std::uint64_t value) {
    const std::uint64_t needed = (value >> 6) + 2;
    if (needed <= members_.size()) return;
    std::uint64_t words = std::max<std::uint64_t>(members_.size(), 1024);
    while (words < needed) words *= 2;
    const std::uint64_t bytes = (words + 2 * kWindowWords) * sizeof(std::uint64_t);
    if (bytes > memory_cap_) {
      throw ResourceError("sieve memory budget of " + std::to_string(memory_cap_) +
                          " bytes exceeded while extending to value " + std::to_string(value));
    }
    members_.resize(words, 0);
  }

  void add_member(std::uint64_t v) {
    ensure_member_capacity(v);
    members_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void append(std::uint64_t p) {
    add_member(p);
    terms_.push_back(p);
    cursor_ = p + 1;
    merge_term(p, p + 1, std::min(window_hi_, 2 * p));
  }

  std::optional<std::uint64_t> find_candidate(std::uint64_t from, std::uint64_t to) const {
    if (from >= to) return std::nullopt;
    std::size_t k = (from - window_lo_) >> 6;
    const std::size_t last = (to - 1 - window_lo_) >> 6;
    std::uint64_t word = ones_[k] & ~twos_[k] & (~std::uint64_t{0} << ((from - window_lo_) & 63));
    for (;;) {
      if (word != 0) {
        const std::uint64_t pos = window_lo_ + 64 * k + static_cast<unsigned>(std::countr_zero(word));
        return pos < to ? std::optional<std::uint64_t>(pos) : std::nullopt;
      }
      if (++k > last) return std::nullopt;
      word = ones_[k] & ~twos_[k];
    }
  }

  void open_window(std::uint64_t lo) {
    window_lo_ = lo;
    window_hi_ = lo + kWindowBits;
    ones_.fill(0);
    twos_.fill(0);
    // Terms c contribute c + b for b < c, i.e. positions in (c, 2c).
    auto first = std::upper_bound(terms_.begin(), terms_.end(), lo / 2);
    for (auto it = first; it != terms_.end(); ++it) {
      const std::uint64_t c = *it;
      merge_term(c, std::max(lo, c + 1), std::min(window_hi_, 2 * c));
    }
  }

  // Bits [s, s + 64) of the membership set; s may be negative.
  std::uint64_t extract(std::int64_t s) const {
    if (s <= -64) return 0;
    if (s < 0) return members_[0] << static_cast<unsigned>(-s);
    const auto w = static_cast<std::size_t>(s >> 6);
    const unsigned r = static_cast<unsigned>(s & 63);
    if (r == 0) return members_[w];
    return (members_[w] >> r) | (members_[w + 1] << (64 - r));
  }

  void update(std::size_t k, std::uint64_t src) {
    const std::uint64_t t = twos_[k] | (ones_[k] & src);
    ones_[k] = (ones_[k] | src) & ~t;
    twos_[k] = t;
  }

  // Adds one representation c + (p - c) to every position p in [p_lo, p_hi)
  // whose partner p - c is a member.
  void merge_term(std::uint64_t c, std::uint64_t p_lo, std::uint64_t p_hi) {
    if (p_lo >= p_hi) return;
    const std::size_t k0 = (p_lo - window_lo_) >> 6;
    const std::size_t k1 = (p_hi - 1 - window_lo_) >> 6;
    const auto src_at = [&](std::size_t k) {
      return static_cast<std::int64_t>(window_lo_ + 64 * k) - static_cast<std::int64_t>(c);
    };
    const std::uint64_t lo_mask = ~std::uint64_t{0} << ((p_lo - window_lo_) & 63);
    const unsigned hi_bits = static_cast<unsigned>((p_hi - window_lo_) & 63);
    const std::uint64_t hi_mask = hi_bits == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} >> (64 - hi_bits));
    if (k0 == k1) {
      update(k0, extract(src_at(k0)) & lo_mask & hi_mask);
      return;
    }
    update(k0, extract(src_at(k0)) & lo_mask);
    update(k1, extract(src_at(k1)) & hi_mask);
    if (k1 <= k0 + 1) return;

    // Interior words: the source offset is non-negative and advances by one
    // word per target word.
    const auto s = static_cast<std::uint64_t>(src_at(k0 + 1));
    const std::uint64_t* src = members_.data() + (s >> 6);
    const unsigned r = static_cast<unsigned>(s & 63);
    std::uint64_t* ones = ones_.data() + k0 + 1;
    std::uint64_t* twos = twos_.data() + k0 + 1;
    const std::size_t n = k1 - k0 - 1;
    if (r == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t v = src[i];
        const std::uint64_t t = twos[i] | (ones[i] & v);
        ones[i] = (ones[i] | v) & ~t;
        twos[i] = t;
      }
    } else {
      const unsigned l = 64 - r;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t v = (src[i] >> r) | (src[i + 1] << l);
        const std::uint64_t t = twos[i] | (ones[i] & v);
        ones[i] = (ones[i] | v) & ~t;
        twos[i] = t;
      }
    }
  }

  std::uint64_t memory_cap_;
  std::vector<std::uint64_t> members_;
  std::vector<std::uint64_t> terms_;
  alignas(64) std::array<std::uint64_t, kWindowWords> ones_{};
  alignas(64) std::array<std::uint64_t, kWindowWords> twos_{};
  std::uint64_t window_lo_ = 0;
  std::uint64_t window_hi_ = 0;
  std::uint64_t cursor_ = 0;
};

}  // namespace detail

// Greedy Ulam-type sequence: after the two initial values, each term is the
// least integer above its predecessor that is b + c for exactly one pair of
// earlier terms b < c.
inline SequenceData ulam_terms(const SequenceSpec& spec, const GenerationOptions& options = {}) {
  spec.validate();
  if (spec.family != Family::ulam) throw ArgumentError("ulam_terms needs family=ulam");

  constexpr std::uint64_t kMaxValue = std::uint64_t{1} << 62;
  const std::uint64_t limit = std::min(spec.limit.value_or(kMaxValue), kMaxValue);
  const std::uint64_t count = spec.count.value_or(std::numeric_limits<std::uint64_t>::max());
  const auto [a1, a2] = spec.init;

  SequenceData out;
  out.spec = spec;
  if (a2 > limit) {
    if (a1 <= limit) out.terms.push_back(a1);
    out.generated_up_to = limit;
    return out;
  }

  auto sieve = std::make_unique<detail::UlamSieve>(a1, a2, options.memory_cap_bytes);
  std::uint64_t emitted = 2;
  while (emitted < count && sieve->next(limit)) ++emitted;
  out.generated_up_to = emitted >= count ? sieve->terms().back() : sieve->cursor() - 1;
  out.terms = sieve->release_terms();
  return out;
}

// Fraction of [1, limit] occupied by terms.
inline Fraction density(const SequenceData& data, std::uint64_t limit) {
  if (limit == 0) throw ArgumentError("density limit must be positive");
  if (data.generated_up_to < limit) {
    throw PreconditionError("density limit " + std::to_string(limit) +
                            " exceeds the generated range " + std::to_string(data.generated_up_to));
  }
  const auto n = std::count_if(data.terms.begin(), data.terms.end(),
                               [limit](std::uint64_t t) { return t >= 1 && t <= limit; });
  return {static_cast<std::uint64_t>(n), limit};
}

}  // namespace ulam
