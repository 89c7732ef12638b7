#pragma once

// ulamsig command-line front end. Every run validates its whole configuration
// before computing, writes artifacts atomically and leaves a JSON manifest
// (command, argv, parameters, input/output checksums, tool version) that the
// `replay` command re-executes.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ulam/auxseq.hpp"
#include "ulam/distribution.hpp"
#include "ulam/error.hpp"
#include "ulam/frequency_parse.hpp"
#include "ulam/generate.hpp"
#include "ulam/io.hpp"
#include "ulam/periodicity.hpp"
#include "ulam/seqgen.hpp"
#include "ulam/spectrum.hpp"
#include "ulam/zeta.hpp"

namespace ulam::cli {

inline constexpr const char* kToolName = "ulamsig";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kMemoryCapEnv = "ULAMSIG_MEMORY_CAP";

enum class Command { gen, scan, refine, hist, signtest, coeffs, fold, period, synth, zeta_load, zeta_band, replay };

inline const char* command_name(Command c) {
  switch (c) {
    case Command::gen: return "gen";
    case Command::scan: return "scan";
    case Command::refine: return "refine";
    case Command::hist: return "hist";
    case Command::signtest: return "signtest";
    case Command::coeffs: return "coeffs";
    case Command::fold: return "fold";
    case Command::period: return "period";
    case Command::synth: return "synth";
    case Command::zeta_load: return "zeta-load";
    case Command::zeta_band: return "zeta-band";
    case Command::replay: return "replay";
  }
  return "?";
}

struct RunConfig {
  Command command = Command::gen;
  std::vector<std::string> argv;

  std::optional<std::string> seq;
  std::optional<std::string> zeros;
  std::optional<std::string> out;
  std::optional<std::string> manifest;
  std::optional<std::string> manifest_in;

  std::string family = "ulam";
  std::string init = "1,2";
  std::optional<std::uint64_t> count;
  std::optional<std::uint64_t> limit;
  std::optional<double> alpha_star;
  std::optional<std::uint64_t> n_terms;

  std::optional<std::string> alpha;
  double xmin = 0.0;
  double xmax = 3.141592653589793;
  std::optional<double> step;
  std::optional<std::string> seed;
  std::optional<std::string> schedule;
  std::size_t bins = kDefaultBins;
  std::int64_t lmax = 8;
  std::uint64_t ell = 2;
  std::uint64_t min_confirmations = kDefaultConfirmations;
  std::size_t point_budget = std::size_t{1} << 24;

  unsigned threads = 1;
  std::uint64_t memory_cap = kDefaultMemoryCap;
};

namespace detail {

inline std::vector<std::uint64_t> parse_u64_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ArgumentError(std::string("cannot parse ") + what + " '" + text + "'");
    }
    out.push_back(std::stoull(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::pair<double, double> parse_bracket(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ArgumentError("seed bracket must be lo,hi");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const auto lo_text = text.substr(0, comma);
    const auto hi_text = text.substr(comma + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument("trailing");
    if (!(lo < hi)) throw ArgumentError("seed bracket needs lo < hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ArgumentError("cannot parse seed bracket '" + text + "'");
  }
}

inline bool uses_sequence(Command c) {
  switch (c) {
    case Command::scan:
    case Command::refine:
    case Command::hist:
    case Command::signtest:
    case Command::coeffs:
    case Command::fold:
    case Command::period:
      return true;
    default:
      return false;
  }
}

inline bool needs_alpha(Command c) {
  return c == Command::hist || c == Command::signtest || c == Command::coeffs || c == Command::fold ||
         c == Command::zeta_band;
}

inline SequenceSpec spec_from(const RunConfig& cfg) {
  SequenceSpec spec;
  spec.family = family_from_string(cfg.family);
  if (spec.family == Family::ulam) {
    const auto init = parse_u64_list(cfg.init, "--init");
    if (init.size() != 2) throw ArgumentError("--init needs exactly two values a,b");
    spec.init = {init[0], init[1]};
  }
  spec.count = cfg.count;
  spec.limit = cfg.limit;
  spec.alpha_star = cfg.alpha_star;
  return spec;
}

inline Json config_to_json(const RunConfig& cfg) {
  Json j;
  const auto put = [&j](const char* key, const auto& v) {
    if constexpr (requires { v.has_value(); }) {
      if (v) j[key] = *v;
    } else {
      j[key] = v;
    }
  };
  put("seq", cfg.seq);
  put("zeros", cfg.zeros);
  put("out", cfg.out);
  put("family", cfg.family);
  put("init", cfg.init);
  put("count", cfg.count);
  put("limit", cfg.limit);
  put("alpha_star", cfg.alpha_star);
  put("n", cfg.n_terms);
  put("alpha", cfg.alpha);
  put("xmin", cfg.xmin);
  put("xmax", cfg.xmax);
  put("step", cfg.step);
  put("seed", cfg.seed);
  put("schedule", cfg.schedule);
  put("bins", cfg.bins);
  put("lmax", cfg.lmax);
  put("ell", cfg.ell);
  put("min_confirmations", cfg.min_confirmations);
  put("threads", cfg.threads);
  put("memory_cap", cfg.memory_cap);
  return j;
}

}  // namespace detail

// Checks everything that can be checked without touching data.
inline void validate(const RunConfig& cfg) {
  if (cfg.threads < 1) throw ArgumentError("--threads must be at least 1");
  if (cfg.command == Command::replay) {
    if (!cfg.manifest_in) throw ArgumentError("replay needs a manifest path");
    return;
  }
  const bool generates = cfg.command == Command::gen || cfg.command == Command::synth ||
                         (detail::uses_sequence(cfg.command) && !cfg.seq && !cfg.zeros);
  if (cfg.seq && cfg.zeros) throw ArgumentError("--seq and --zeros are mutually exclusive");
  if (generates) {
    auto spec = detail::spec_from(cfg);
    if (cfg.command == Command::synth) spec.family = Family::synthetic;
    if (cfg.command == Command::refine && !spec.count && !spec.limit) spec.count = 2;
    spec.validate();
  }
  if (cfg.command == Command::synth && !cfg.alpha_star) throw ArgumentError("synth needs --alpha-star");
  if (detail::needs_alpha(cfg.command)) {
    if (!cfg.alpha) throw ArgumentError(std::string(command_name(cfg.command)) + " needs --alpha");
    parse_frequency(*cfg.alpha);
  }
  if ((cfg.command == Command::zeta_load || cfg.command == Command::zeta_band) && !cfg.zeros) {
    throw ArgumentError(std::string(command_name(cfg.command)) + " needs --zeros");
  }
  if (cfg.command == Command::scan) {
    if (!cfg.step || !(*cfg.step > 0.0)) throw ArgumentError("scan needs a positive --step");
    if (!(cfg.xmin >= 0.0 && cfg.xmin < cfg.xmax && cfg.xmax <= 2.0 * std::numbers::pi)) {
      throw ArgumentError("scan needs 0 <= --xmin < --xmax <= 2*pi");
    }
  }
  if (cfg.command == Command::refine) {
    if (cfg.seed) detail::parse_bracket(*cfg.seed);
    if (cfg.schedule) {
      const auto s = detail::parse_u64_list(*cfg.schedule, "--schedule");
      for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] <= s[i - 1]) throw ArgumentError("--schedule must be strictly increasing");
      }
      if (s.front() == 0) throw ArgumentError("--schedule sizes must be positive");
    }
  }
  if ((cfg.command == Command::hist || cfg.command == Command::fold) && cfg.bins < 2) {
    throw ArgumentError("--bins must be at least 2");
  }
  if (cfg.command == Command::fold) {
    if (cfg.ell < 1) throw ArgumentError("--ell must be at least 1");
    if (cfg.bins % cfg.ell != 0) throw ArgumentError("--bins must be divisible by --ell");
  }
  if (cfg.command == Command::coeffs && cfg.lmax < 0) throw ArgumentError("--lmax must be >= 0");
  if (cfg.command == Command::period && cfg.min_confirmations < 3) {
    throw ArgumentError("--min-confirmations must be at least 3");
  }
}

// Thrown after --help or --version output has been printed.
struct HelpShown {};

// Parses argv (without the program name). Throws CLI::Error for CLI11-level
// problems and ArgumentError for semantic ones.
inline RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  cfg.argv = args;
  if (const char* env = std::getenv(kMemoryCapEnv)) {
    try {
      cfg.memory_cap = std::stoull(env);
    } catch (const std::exception&) {
      throw ArgumentError(std::string(kMemoryCapEnv) + " must be a byte count");
    }
  }

  CLI::App app{"Ulam-type sequences and their hidden spectral signals", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  const auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Artifact path (stdout if omitted)");
    sub->add_option("--manifest", cfg.manifest, "Manifest path (default <out>.manifest.json)");
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--memory-cap", cfg.memory_cap, "Sieve memory budget in bytes");
  };
  const auto source = [&cfg](CLI::App* sub) {
    sub->add_option("--seq", cfg.seq, "Sequence file (.txt or .bin)");
    sub->add_option("--family", cfg.family, "ulam|stern|macmahon|lagarias|synthetic");
    sub->add_option("--init", cfg.init, "Initial values a,b (ulam)");
    sub->add_option("--count", cfg.count, "Number of terms");
    sub->add_option("--limit", cfg.limit, "Largest term value");
    sub->add_option("--alpha-star", cfg.alpha_star, "Synthetic target frequency");
    sub->add_option("--n", cfg.n_terms, "Use only the first n terms");
  };
  const auto alpha = [&cfg](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "Frequency: decimal or log:K");
  };

  auto* gen = app.add_subcommand("gen", "Generate a sequence");
  common(gen);
  source(gen);
  auto* scan_cmd = app.add_subcommand("scan", "Normalized cosine sum on a grid (CSV x,value)");
  common(scan_cmd);
  source(scan_cmd);
  scan_cmd->add_option("--zeros", cfg.zeros, "Zero-ordinate file used as real-valued terms");
  scan_cmd->add_option("--xmin", cfg.xmin);
  scan_cmd->add_option("--xmax", cfg.xmax);
  scan_cmd->add_option("--step", cfg.step);
  scan_cmd->add_option("--point-budget", cfg.point_budget);
  auto* refine = app.add_subcommand("refine", "Staged peak refinement (JSON)");
  common(refine);
  source(refine);
  refine->add_option("--seed", cfg.seed, "Seed bracket lo,hi");
  refine->add_option("--schedule", cfg.schedule, "Comma-separated term counts");
  auto* hist = app.add_subcommand("hist", "Phase histogram (CSV + JSON sidecar)");
  common(hist);
  source(hist);
  alpha(hist);
  hist->add_option("--zeros", cfg.zeros, "Zero-ordinate file used as real-valued terms");
  hist->add_option("--bins", cfg.bins);
  auto* sign = app.add_subcommand("signtest", "Terms with cos(alpha a_n) >= 0 (JSON)");
  common(sign);
  source(sign);
  alpha(sign);
  auto* coeffs = app.add_subcommand("coeffs", "Coefficients c_0..c_lmax (JSON)");
  common(coeffs);
  source(coeffs);
  alpha(coeffs);
  coeffs->add_option("--lmax", cfg.lmax);
  auto* fold = app.add_subcommand("fold", "Histogram pushed forward by phase -> ell*phase");
  common(fold);
  source(fold);
  alpha(fold);
  fold->add_option("--bins", cfg.bins);
  fold->add_option("--ell", cfg.ell);
  auto* period = app.add_subcommand("period", "Periodicity of consecutive differences (JSON)");
  common(period);
  source(period);
  period->add_option("--min-confirmations", cfg.min_confirmations);
  auto* synth = app.add_subcommand("synth", "Synthetic sequence with phases in [pi/2, 3pi/2]");
  common(synth);
  synth->add_option("--alpha-star", cfg.alpha_star)->required();
  synth->add_option("--count", cfg.count)->required();
  auto* zload = app.add_subcommand("zeta-load", "Validate a zero-ordinate file (JSON summary)");
  common(zload);
  zload->add_option("--zeros", cfg.zeros)->required();
  auto* zband = app.add_subcommand("zeta-band", "Band count of alpha * t_n (JSON)");
  common(zband);
  zband->add_option("--zeros", cfg.zeros)->required();
  alpha(zband);
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", cfg.manifest_in)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) throw;
    app.exit(e);
    throw HelpShown{};
  }

  const std::pair<CLI::App*, Command> table[] = {
      {gen, Command::gen},         {scan_cmd, Command::scan},   {refine, Command::refine},
      {hist, Command::hist},       {sign, Command::signtest},   {coeffs, Command::coeffs},
      {fold, Command::fold},       {period, Command::period},   {synth, Command::synth},
      {zload, Command::zeta_load}, {zband, Command::zeta_band}, {replay, Command::replay}};
  for (const auto& [sub, cmd] : table) {
    if (sub->parsed()) cfg.command = cmd;
  }
  if (cfg.command == Command::synth) cfg.family = "synthetic";
  validate(cfg);
  return cfg;
}

namespace detail {

class Session {
 public:
  explicit Session(const RunConfig& cfg) : cfg_(cfg) {
    manifest_["tool"] = kToolName;
    manifest_["version"] = kToolVersion;
    manifest_["command"] = command_name(cfg.command);
    manifest_["argv"] = cfg.argv;
    manifest_["parameters"] = config_to_json(cfg);
    manifest_["inputs"] = Json::object();
    manifest_["outputs"] = Json::object();
    manifest_["results"] = Json::object();
  }

  void input(const std::string& path) { manifest_["inputs"][path] = sha256_file(path); }

  void result(const std::string& key, Json value) { manifest_["results"][key] = std::move(value); }

  // Primary artifact: --out or stdout.
  void emit(const std::string& bytes) {
    if (cfg_.out) {
      artifact(*cfg_.out, bytes);
    } else {
      std::cout << bytes;
      std::cout.flush();
    }
  }

  void artifact(const std::string& path, const std::string& bytes) {
    write_file_atomic(path, bytes);
    manifest_["outputs"][path] = sha256_hex(bytes);
  }

  void finish() {
    std::string path;
    if (cfg_.manifest) {
      path = *cfg_.manifest;
    } else if (cfg_.out) {
      path = *cfg_.out + ".manifest.json";
    } else {
      path = std::string(kToolName) + "-" + command_name(cfg_.command) + ".manifest.json";
    }
    write_file_atomic(path, manifest_.dump(2) + "\n");
  }

 private:
  const RunConfig& cfg_;
  Json manifest_;
};

inline SequenceData load_or_generate(const RunConfig& cfg, Session& session,
                                     std::optional<std::uint64_t> default_count = std::nullopt) {
  SequenceData data;
  if (cfg.seq) {
    session.input(*cfg.seq);
    data = read_sequence(*cfg.seq);
  } else {
    auto spec = spec_from(cfg);
    if (!spec.count && !spec.limit) spec.count = default_count;
    data = generate(spec, GenerationOptions{cfg.memory_cap});
  }
  if (cfg.n_terms) data = prefix(data, std::min<std::size_t>(*cfg.n_terms, data.terms.size()));
  return data;
}

inline ZeroList load_zeros_input(const RunConfig& cfg, Session& session) {
  session.input(*cfg.zeros);
  auto zeros = load_zeros(*cfg.zeros);
  if (cfg.n_terms && *cfg.n_terms < zeros.ordinates.size()) zeros.ordinates.resize(*cfg.n_terms);
  return zeros;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

inline int run(const RunConfig& cfg) {
  if (cfg.command == Command::replay) {
    const auto manifest = Json::parse(read_file(*cfg.manifest_in));
    const auto argv = manifest.at("argv").get<std::vector<std::string>>();
    auto replayed = parse_args(argv);
    return run(replayed);
  }

  detail::Session session(cfg);
  const auto span_of = [](const SequenceData& d) { return std::span<const std::uint64_t>(d.terms); };

  switch (cfg.command) {
    case Command::gen:
    case Command::synth: {
      auto spec = detail::spec_from(cfg);
      if (cfg.command == Command::synth) spec.family = Family::synthetic;
      const auto data = generate(spec, GenerationOptions{cfg.memory_cap});
      if (cfg.out) {
        session.emit(serialize_sequence(data, *cfg.out));
      } else if (data.spec.family == Family::stern) {
        std::string text;
        for (std::size_t i = 0; i < data.terms.size(); ++i) {
          text += std::to_string(i) + '\t' + std::to_string(data.terms[i]) + '\n';
        }
        session.emit(text);
      } else {
        session.emit(sequence_to_text(data));
      }
      session.result("n_terms", data.terms.size());
      session.result("generated_up_to", data.generated_up_to);
      break;
    }
    case Command::scan: {
      ScanOptions opts{cfg.point_budget, cfg.threads};
      SpectrumGrid grid;
      if (cfg.zeros) {
        const auto zeros = detail::load_zeros_input(cfg, session);
        grid = scan(std::span<const double>(zeros.ordinates), cfg.xmin, cfg.xmax, *cfg.step, opts);
      } else {
        const auto data = detail::load_or_generate(cfg, session);
        grid = scan(span_of(data), cfg.xmin, cfg.xmax, *cfg.step, opts);
      }
      session.emit(grid_to_csv(grid));
      session.result("n_terms", grid.n_terms);
      session.result("points", grid.x_values.size());
      break;
    }
    case Command::refine: {
      std::vector<std::uint64_t> schedule;
      if (cfg.schedule) schedule = detail::parse_u64_list(*cfg.schedule, "--schedule");
      const auto data = detail::load_or_generate(
          cfg, session, schedule.empty() ? std::optional<std::uint64_t>{1000000} : schedule.back());
      if (schedule.empty()) {
        for (std::uint64_t n = 10000; n <= data.terms.size(); n *= 10) schedule.push_back(n);
        if (schedule.empty() || schedule.back() != data.terms.size()) schedule.push_back(data.terms.size());
      }
      ScanOptions scan_opts;
      scan_opts.threads = cfg.threads;
      const auto seed = cfg.seed ? detail::parse_bracket(*cfg.seed)
                                 : default_seed_bracket(span_of(data), 10000, scan_opts);
      RefineOptions opts;
      opts.threads = cfg.threads;
      const auto est = refine_peak(span_of(data), seed, schedule, opts);
      session.result("seed", {seed.first, seed.second});
      session.emit(detail::dump(to_json(est)));
      break;
    }
    case Command::hist: {
      const auto alpha = parse_frequency(*cfg.alpha);
      PhaseHistogram h;
      if (cfg.zeros) {
        const auto zeros = detail::load_zeros_input(cfg, session);
        h = phase_histogram(std::span<const double>(zeros.ordinates), alpha, cfg.bins, cfg.threads);
      } else {
        const auto data = detail::load_or_generate(cfg, session);
        h = phase_histogram(span_of(data), alpha, cfg.bins, cfg.threads);
      }
      session.emit(histogram_to_csv(h));
      if (cfg.out) session.artifact(*cfg.out + ".json", detail::dump(histogram_sidecar(h)));
      session.result("band_mass", cfg.bins % 4 == 0 ? Json(band_mass(h)) : Json(nullptr));
      break;
    }
    case Command::signtest: {
      const auto data = detail::load_or_generate(cfg, session);
      const auto alpha = parse_frequency(*cfg.alpha);
      const auto ex = sign_exceptions(span_of(data), alpha);
      Json j{{"alpha", alpha.value()}, {"n_terms", data.terms.size()}, {"exceptions", ex}};
      session.emit(detail::dump(j));
      break;
    }
    case Command::coeffs: {
      const auto data = detail::load_or_generate(cfg, session);
      const auto table = coeff_table(span_of(data), parse_frequency(*cfg.alpha), cfg.lmax, cfg.threads);
      session.emit(detail::dump(to_json(table)));
      break;
    }
    case Command::fold: {
      const auto data = detail::load_or_generate(cfg, session);
      const auto alpha = parse_frequency(*cfg.alpha);
      const auto h = phase_histogram(span_of(data), alpha, cfg.bins, cfg.threads);
      const auto folded = fold_histogram(h, cfg.ell);
      const auto direct = phase_histogram(span_of(data), scale(alpha, static_cast<std::int64_t>(cfg.ell)),
                                          folded.bins, cfg.threads);
      session.emit(histogram_to_csv(folded));
      if (cfg.out) session.artifact(*cfg.out + ".json", detail::dump(histogram_sidecar(folded)));
      session.result("total_variation_vs_direct", total_variation(folded, direct));
      break;
    }
    case Command::period: {
      const auto data = detail::load_or_generate(cfg, session);
      session.emit(detail::dump(to_json(detect_period(data, cfg.min_confirmations))));
      break;
    }
    case Command::zeta_load: {
      session.input(*cfg.zeros);
      const auto zeros = load_zeros(*cfg.zeros);
      Json j{{"source", zeros.source},
             {"n_zeros", zeros.count()},
             {"first", zeros.ordinates.front()},
             {"last", zeros.ordinates.back()},
             {"source_checksum", sha256_file(*cfg.zeros)}};
      session.emit(detail::dump(j));
      break;
    }
    case Command::zeta_band: {
      session.input(*cfg.zeros);
      const auto zeros = load_zeros(*cfg.zeros);
      const auto alpha = parse_frequency(*cfg.alpha);
      const auto report = band_count_report(zeros, alpha);
      Json j{{"alpha", alpha.value()},
             {"count", report.count},
             {"n_zeros", zeros.count()},
             {"source_checksum", sha256_file(*cfg.zeros)},
             {"near_edge", report.near_edge}};
      if (const auto k = log_argument(*cfg.alpha)) {
        if (const auto pm = prime_power(*k)) {
          const double t_n = zeros.ordinates.back();
          const double observed =
              cosine_sum(std::span<const double>(zeros.ordinates), alpha) * static_cast<double>(zeros.count());
          j["landau"] = Json{{"p", pm->first},
                             {"m", pm->second},
                             {"t_N", t_n},
                             {"leading_term", landau_term(pm->first, pm->second, t_n)},
                             {"classical_leading_term", landau_term_classical(pm->first, pm->second, t_n)},
                             {"observed_sum", observed},
                             {"note", "leading_term uses sqrt(log p^m) in the denominator as displayed; "
                                      "classical_leading_term has p^(m/2) there"}};
        }
      }
      if (!report.near_edge.empty()) {
        std::cerr << "warning: " << report.near_edge.size()
                  << " phase(s) lie within 1e-7 of a band edge; count may be off by that many\n";
      }
      session.emit(detail::dump(j));
      break;
    }
    case Command::replay:
      break;
  }
  session.finish();
  return 0;
}

// Exit status: 0 success, 1 argument error, 2 data or resource error.
inline int main_entry(const std::vector<std::string>& args) {
  try {
    return run(parse_args(args));
  } catch (const HelpShown&) {
    return 0;
  } catch (const CLI::Error& e) {
    std::cerr << kToolName << ": " << e.what() << '\n';
    return 1;
  } catch (const ArgumentError& e) {
    std::cerr << kToolName << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << kToolName << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ulam::cli
