#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "ulam/auxseq.hpp"
#include "ulam/distribution.hpp"
#include "ulam/io.hpp"
#include "ulam/seqgen.hpp"

using namespace ulam;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("ulam-io-" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST(SequenceText, RoundTrip) {
  const auto data = ulam_terms(SequenceSpec::ulam(2, 3, 500));
  std::istringstream in(sequence_to_text(data));
  const auto back = parse_sequence_text(in, "mem");
  EXPECT_EQ(back.terms, data.terms);
  EXPECT_EQ(back.generated_up_to, data.generated_up_to);
  EXPECT_EQ(back.spec.init, data.spec.init);
  EXPECT_EQ(back.spec.family, Family::ulam);
}

TEST(SequenceText, SternKeepsIndexOrder) {
  const auto data = stern_terms(50);
  std::istringstream in(sequence_to_text(data));
  const auto back = parse_sequence_text(in, "mem");
  EXPECT_EQ(back.terms, data.terms);
  EXPECT_EQ(back.spec.family, Family::stern);
}

TEST(SequenceText, LastLineOfPrefix) {
  const auto text = sequence_to_text(ulam_terms(SequenceSpec::ulam(1, 2, 25)));
  EXPECT_EQ(text.substr(text.size() - 3), "97\n");
}

TEST(SequenceText, ParseErrors) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_sequence_text(in, "t");
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("1\n2\nx\n"), 3u);
  EXPECT_EQ(line_of("# family: ulam\n1\n2\n2\n"), 4u);
  EXPECT_EQ(line_of("1\n-2\n"), 2u);
  EXPECT_EQ(line_of("1\n2 3\n"), 2u);
  std::istringstream low("# generated_up_to: 1\n1\n5\n");
  EXPECT_THROW(parse_sequence_text(low, "t"), DataError);
}

TEST(SequenceBinary, RoundTrip) {
  const auto data = ulam_terms(SequenceSpec::ulam(1, 2, 3000));
  const auto bytes = sequence_to_binary(data);
  EXPECT_EQ(bytes.size(), 13 + 8 * 3000u);
  EXPECT_EQ(bytes.substr(0, 5), std::string("USEQ\x01", 5));
  EXPECT_EQ(parse_sequence_binary(bytes, "b").terms, data.terms);
}

TEST(SequenceBinary, Corrupt) {
  auto bytes = sequence_to_binary(ulam_terms(SequenceSpec::ulam(1, 2, 10)));
  EXPECT_THROW(parse_sequence_binary(bytes.substr(0, bytes.size() - 1), "b"), DataError);
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_THROW(parse_sequence_binary(bad_magic, "b"), DataError);
  auto bad_version = bytes;
  bad_version[4] = 2;
  EXPECT_THROW(parse_sequence_binary(bad_version, "b"), DataError);
}

TEST(Files, ExtensionSelectsFormat) {
  TempDir dir;
  const auto data = ulam_terms(SequenceSpec::ulam(1, 2, 100));
  for (const char* name : {"s.txt", "s.bin"}) {
    const auto path = dir / name;
    write_file_atomic(path, serialize_sequence(data, path));
    EXPECT_EQ(read_sequence(path).terms, data.terms) << name;
  }
  EXPECT_EQ(read_file(dir / "s.bin").substr(0, 4), "USEQ");
  EXPECT_THROW(read_sequence(dir / "missing.txt"), DataError);
}

TEST(Files, AtomicWriteLeavesNoTemporaries) {
  TempDir dir;
  write_file_atomic(dir / "a.json", "{}\n");
  write_file_atomic(dir / "a.json", "{\"x\":1}\n");
  EXPECT_EQ(read_file(dir / "a.json"), "{\"x\":1}\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++files;
  EXPECT_EQ(files, 1u);
  EXPECT_THROW(write_file_atomic(dir / "no/such/dir/f", "x"), DataError);
}

TEST(Artifacts, CsvShapes) {
  SpectrumGrid g{{0.5, 1.0}, {0.25, -1.0}, 10};
  EXPECT_EQ(grid_to_csv(g), "x,value\n0.5,0.25\n1,-1\n");
  PhaseHistogram h;
  h.bins = 4;
  h.counts = {1, 0, 2, 3};
  h.n_total = 6;
  h.alpha = Frequency{2.0};
  const auto csv = histogram_to_csv(h);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "bin_lo,bin_hi,count");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_EQ(histogram_sidecar(h).dump(), R"({"alpha":2.0,"bins":4,"n_total":6})");
}

TEST(Artifacts, JsonShapes) {
  PeriodicityReport r;
  r.even_terms = {2};
  EXPECT_EQ(to_json(r).dump(),
            R"({"periodic":false,"preperiod":null,"period":null,"confirmations":0,"even_terms":[2]})");
  CoeffTable t{2.5, {1.0, -0.5}};
  EXPECT_EQ(to_json(t).dump(), R"({"alpha":2.5,"coeffs":[1.0,-0.5]})");
  PeakEstimate e;
  e.stages = {{100, 0.5}};
  EXPECT_EQ(to_json(e)["stages"][0]["n_terms"], 100);
}

TEST(Checksums, Sha256) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
