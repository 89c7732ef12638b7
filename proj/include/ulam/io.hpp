#pragma once

// File formats.
//
//   Sequence text:   '#'-prefixed "key: value" metadata lines, then one
//                    decimal term per line (strictly increasing except stern).
//   Sequence binary: "USEQ", version byte 0x01, u64 LE term count, u64 LE terms.
//   SpectrumGrid:    CSV "x,value".
//   PhaseHistogram:  CSV "bin_lo,bin_hi,count" plus JSON {alpha, bins, n_total}.
//   PeakEstimate, CoeffTable, PeriodicityReport: one JSON object each.

#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <unistd.h>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "ulam/distribution.hpp"
#include "ulam/error.hpp"
#include "ulam/periodicity.hpp"
#include "ulam/sequence.hpp"
#include "ulam/spectrum.hpp"

namespace ulam {

using Json = nlohmann::ordered_json;

inline constexpr std::array<char, 4> kBinaryMagic{'U', 'S', 'E', 'Q'};
inline constexpr std::uint8_t kBinaryVersion = 0x01;

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------- sequences

inline std::string sequence_to_text(const SequenceData& data) {
  std::ostringstream out;
  out << "# family: " << to_string(data.spec.family) << '\n';
  if (data.spec.family == Family::ulam) {
    out << "# init: " << data.spec.init.first << ',' << data.spec.init.second << '\n';
  }
  if (data.spec.family == Family::stern) out << "# index_base: 0\n";
  if (data.spec.alpha_star) out << "# alpha_star: " << format_real(*data.spec.alpha_star) << '\n';
  out << "# count: " << data.terms.size() << '\n';
  out << "# generated_up_to: " << data.generated_up_to << '\n';
  for (const auto t : data.terms) out << t << '\n';
  return out.str();
}

inline SequenceData parse_sequence_text(std::istream& in, const std::string& source) {
  SequenceData data;
  std::optional<std::uint64_t> up_to;
  std::string line;
  std::size_t line_no = 0;
  const auto parse_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    std::size_t used = 0;
    try {
      v = std::stoull(std::string(s), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || s.front() == '-' || s.front() == '+') {
      throw ParseError(source, line_no, "expected an unsigned integer, got '" + std::string(s) + "'");
    }
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      auto key = line.substr(1, colon - 1);
      auto value = line.substr(colon + 1);
      const auto trim = [](std::string& s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
      };
      trim(key);
      trim(value);
      if (key == "family") {
        data.spec.family = family_from_string(value);
      } else if (key == "init") {
        const auto comma = value.find(',');
        if (comma == std::string::npos) throw ParseError(source, line_no, "init needs a,b");
        data.spec.init = {parse_u64(value.substr(0, comma)), parse_u64(value.substr(comma + 1))};
      } else if (key == "generated_up_to") {
        up_to = parse_u64(value);
      } else if (key == "alpha_star") {
        data.spec.alpha_star = std::stod(value);
      }
      continue;
    }
    const std::uint64_t t = parse_u64(line);
    if (data.spec.family != Family::stern && !data.terms.empty() && t <= data.terms.back()) {
      throw ParseError(source, line_no, "terms must be strictly increasing");
    }
    data.terms.push_back(t);
  }
  data.spec.count = data.terms.size();
  std::uint64_t max_term = 0;
  for (const auto t : data.terms) max_term = std::max(max_term, t);
  data.generated_up_to = up_to.value_or(max_term);
  if (data.generated_up_to < max_term) {
    throw DataError(source + ": generated_up_to is below the largest term");
  }
  return data;
}

inline std::string sequence_to_binary(const SequenceData& data) {
  std::string out;
  out.reserve(13 + 8 * data.terms.size());
  out.append(kBinaryMagic.data(), kBinaryMagic.size());
  out.push_back(static_cast<char>(kBinaryVersion));
  const auto put = [&out](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  put(data.terms.size());
  for (const auto t : data.terms) put(t);
  return out;
}

inline SequenceData parse_sequence_binary(std::string_view bytes, const std::string& source) {
  if (bytes.size() < 13 || bytes.substr(0, 4) != std::string_view(kBinaryMagic.data(), 4)) {
    throw DataError(source + ": not a USEQ sequence file");
  }
  if (static_cast<std::uint8_t>(bytes[4]) != kBinaryVersion) {
    throw DataError(source + ": unsupported USEQ version " +
                    std::to_string(static_cast<std::uint8_t>(bytes[4])));
  }
  const auto get = [&bytes](std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[at + i])) << (8 * i);
    }
    return v;
  };
  const std::uint64_t n = get(5);
  if ((bytes.size() - 13) / 8 != n || (bytes.size() - 13) % 8 != 0) {
    throw DataError(source + ": header announces " + std::to_string(n) + " terms but the file holds " +
                    std::to_string((bytes.size() - 13) / 8));
  }
  SequenceData data;
  data.terms.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) data.terms[i] = get(13 + 8 * i);
  if (n >= 2) data.spec.init = {data.terms[0], data.terms[1]};
  data.spec.count = n;
  for (const auto t : data.terms) data.generated_up_to = std::max(data.generated_up_to, t);
  return data;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline bool is_binary_path(const std::string& path) {
  return std::filesystem::path(path).extension() == ".bin";
}

inline SequenceData read_sequence(const std::string& path) {
  if (is_binary_path(path)) return parse_sequence_binary(read_file(path), path);
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return parse_sequence_text(in, path);
}

inline std::string serialize_sequence(const SequenceData& data, const std::string& path) {
  return is_binary_path(path) ? sequence_to_binary(data) : sequence_to_text(data);
}

// ---------------------------------------------------------------- artifacts

inline std::string grid_to_csv(const SpectrumGrid& grid) {
  std::string out = "x,value\n";
  for (std::size_t i = 0; i < grid.x_values.size(); ++i) {
    out += format_real(grid.x_values[i]);
    out += ',';
    out += format_real(grid.values[i]);
    out += '\n';
  }
  return out;
}

inline std::string histogram_to_csv(const PhaseHistogram& h) {
  std::string out = "bin_lo,bin_hi,count\n";
  const double width = 2.0 * std::numbers::pi / static_cast<double>(h.bins);
  for (std::size_t b = 0; b < h.bins; ++b) {
    out += format_real(width * static_cast<double>(b));
    out += ',';
    out += format_real(width * static_cast<double>(b + 1));
    out += ',';
    out += std::to_string(h.counts[b]);
    out += '\n';
  }
  return out;
}

inline Json histogram_sidecar(const PhaseHistogram& h) {
  return Json{{"alpha", h.alpha.value()}, {"bins", h.bins}, {"n_total", h.n_total}};
}

inline Json to_json(const PeakEstimate& e) {
  Json stages = Json::array();
  for (const auto& s : e.stages) stages.push_back({{"n_terms", s.n_terms}, {"bracket_width", s.bracket_width}});
  return Json{{"alpha", e.alpha},
              {"bracket", {e.bracket.first, e.bracket.second}},
              {"peak_value", e.peak_value},
              {"n_terms_final", e.n_terms_final},
              {"stages", stages}};
}

inline Json to_json(const CoeffTable& t) { return Json{{"alpha", t.alpha}, {"coeffs", t.coeffs}}; }

inline Json to_json(const PeriodicityReport& r) {
  const auto opt = [](const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); };
  return Json{{"periodic", r.periodic},
              {"preperiod", opt(r.preperiod)},
              {"period", opt(r.period)},
              {"confirmations", r.confirmations},
              {"even_terms", r.even_terms}};
}

// ---------------------------------------------------------------- plumbing

inline std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

inline std::string sha256_file(const std::string& path) { return sha256_hex(read_file(path)); }

// Writes through a temporary file in the same directory and renames it into
// place, so readers never observe a partial artifact.
inline void write_file_atomic(const std::string& path, std::string_view bytes) {
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw DataError("short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw DataError("cannot move artifact into place at " + path);
  }
}

}  // namespace ulam
