#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mta/cli.hpp"
#include "mta/io.hpp"
#include "test_util.hpp"

using namespace mta;
using mta::test::error_code_of;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() / (std::string("mta_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(LoadCsv, HeaderlessSingleColumn) {
  TempDir dir;
  write_file(dir / "a.csv", "1.5\n2\n\n-3e2\n");
  const auto ts = io::load_csv(dir / "a.csv");
  EXPECT_EQ(std::vector<double>(ts.values().begin(), ts.values().end()), (std::vector<double>{1.5, 2, -300}));
}

TEST(LoadCsv, HeaderAndNamedColumn) {
  TempDir dir;
  write_file(dir / "b.csv", "date,price\n2020-01-01,10\n2020-01-02,11.5\r\n");
  const auto ts = io::load_csv(dir / "b.csv", "price");
  EXPECT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[1], 11.5);
  const auto by_index = io::load_csv(dir / "b.csv", "1");
  EXPECT_EQ(by_index.size(), 2u);
  EXPECT_EQ(error_code_of([&] { io::load_csv(dir / "b.csv", "volume"); }), ErrorCode::ConfigInvalid);
}

TEST(LoadCsv, Errors) {
  TempDir dir;
  EXPECT_EQ(error_code_of([&] { io::load_csv(dir / "missing.csv"); }), ErrorCode::IoError);
  write_file(dir / "nan.csv", "1\nnan\n2\n");
  EXPECT_EQ(error_code_of([&] { io::load_csv(dir / "nan.csv"); }), ErrorCode::NonFiniteValue);
  write_file(dir / "junk.csv", "1\n2\nabc\n");
  EXPECT_EQ(error_code_of([&] { io::load_csv(dir / "junk.csv"); }), ErrorCode::IoError);
}

TEST(SeriesCsv, RoundTripIsLossless) {
  TempDir dir;
  const auto bench = testkit::make_benchmark_61(3);
  io::write_atomic(dir / "w.csv", io::series_to_csv(bench.series));
  const auto back = io::load_csv(dir / "w.csv");
  ASSERT_EQ(back.size(), bench.series.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i], bench.series[i]);
}

TEST(Round15, FifteenSignificantDigits) {
  EXPECT_EQ(io::round15(0.1 + 0.2), 0.3);
  EXPECT_EQ(io::round15(1.0 / 3.0), 0.333333333333333);
  EXPECT_EQ(nlohmann::json(io::round15(2.0 / 3.0)).dump(), "0.666666666666667");
}

TEST(CatalogDocument, RoundTripPreservesInvariants) {
  const auto bench = testkit::make_benchmark_61(5);
  MtaConfig c;
  const auto result = run(bench.series, c);
  const auto doc = io::catalog_document(result, compute_stats(result));
  EXPECT_EQ(doc.at("schema_version"), io::kSchemaVersion);
  const auto back = io::catalog_from_document(nlohmann::json::parse(doc.dump()));
  ASSERT_EQ(back.size(), result.catalog.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back.motifs[i].occurrences, result.catalog.motifs[i].occurrences);
    EXPECT_EQ(back.motifs[i].length, result.catalog.motifs[i].length);
    EXPECT_EQ(back.motifs[i].symbols, result.catalog.motifs[i].symbols);
  }
  EXPECT_EQ(back.series_length, result.series.diff.size());
}

TEST(CatalogDocument, RejectsBrokenInvariants) {
  nlohmann::json doc{{"schema_version", 1},
                     {"series", {{"diff_length", 100}}},
                     {"motifs",
                      {{{"symbols", "a"},
                        {"length", 10},
                        {"occurrences_diff", {0, 5}},
                        {"occurrences_raw", {0, 5}},
                        {"max_subset_distance", 0.0}}}}};
  EXPECT_EQ(error_code_of([&] { io::catalog_from_document(doc); }), ErrorCode::ConfigInvalid);
  doc["schema_version"] = 99;
  EXPECT_EQ(error_code_of([&] { io::catalog_from_document(doc); }), ErrorCode::ConfigInvalid);
  EXPECT_EQ(error_code_of([&] { io::catalog_from_document(nlohmann::json::object()); }),
            ErrorCode::ConfigInvalid);
}

TEST(OverlayCsv, PivotAgainstMeanOfOthers) {
  std::vector<double> v(100);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
  const TimeSeries ts(v);
  const MemoryMotif two{"a", 5, {0, 20}, 0.0};
  std::istringstream in(io::overlay_csv(two, ts));
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "t,occurrence_1,occurrence_2,mean_of_others");
  EXPECT_EQ(first, "0,0,20,20");

  const MemoryMotif six{"a", 5, {0, 10, 20, 30, 40, 50}, 0.0};
  std::istringstream in6(io::overlay_csv(six, ts));
  std::getline(in6, header);
  std::getline(in6, first);
  EXPECT_EQ(header, "t,occurrence_1,occurrence_2,occurrence_3,occurrence_4,occurrence_5,occurrence_6,mean_of_others");
  EXPECT_EQ(first, "0,0,10,20,30,40,50,30");
  int rows = 1;
  for (std::string line; std::getline(in6, line);) ++rows;
  EXPECT_EQ(rows, 6);
}

TEST(Cli, DiscoverWritesCatalog) {
  TempDir dir;
  ASSERT_EQ(run_cli({"synth", "--seed", "1", "-o", (dir / "walk.csv").string()}).code, 0);
  EXPECT_TRUE(fs::exists(dir / "walk_truth.json"));
  const auto r = run_cli({"discover", (dir / "walk.csv").string(), "--symbol-length", "10", "--alphabet", "6",
                      "--threshold", "0.5", "-o", (dir / "cat.json").string(), "--occurrences-csv",
                      (dir / "occ.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(read_file(dir / "cat.json"));
  EXPECT_EQ(doc.at("config").at("match_threshold_r"), 5.0);
  EXPECT_FALSE(doc.at("motifs").empty());
  EXPECT_TRUE(read_file(dir / "occ.csv").starts_with("motif_id,symbols,length,occurrence,start_diff,start_raw\n"));
  EXPECT_FALSE(fs::exists(dir / "cat.json.tmp"));
}

TEST(Cli, ThresholdFraction) {
  TempDir dir;
  ASSERT_EQ(run_cli({"synth", "--seed", "2", "-o", (dir / "walk.csv").string()}).code, 0);
  const auto r = run_cli({"discover", (dir / "walk.csv").string(), "--threshold-frac", "0.15",
                      "--symbol-length", "5", "--alphabet", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const double sigma = doc.at("series").at("sigma_diff");
  EXPECT_NEAR(doc.at("config").at("per_point_threshold").get<double>(), 0.15 * sigma, 1e-12);
  EXPECT_EQ(doc.at("config").at("threshold").at("kind"), "fraction_of_sigma");
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  auto missing = run_cli({"discover", (dir / "nope.csv").string(), "-o", (dir / "out.json").string()});
  EXPECT_EQ(missing.code, cli::kIoError);
  EXPECT_FALSE(fs::exists(dir / "out.json"));
  EXPECT_FALSE(missing.err.empty());

  write_file(dir / "flat.csv", "1\n1\n1\n1\n1\n1\n1\n1\n1\n1\n1\n1\n");
  EXPECT_EQ(run_cli({"discover", (dir / "flat.csv").string(), "-s", "2"}).code, cli::kDegenerateSeries);

  ASSERT_EQ(run_cli({"synth", "-o", (dir / "w.csv").string()}).code, 0);
  EXPECT_EQ(run_cli({"discover", (dir / "w.csv").string(), "--alphabet", "30"}).code, cli::kConfigError);
  EXPECT_EQ(run_cli({"discover", (dir / "w.csv").string(), "--threshold", "0.5", "--threshold-frac", "0.1"}).code,
            cli::kConfigError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kConfigError);
  EXPECT_EQ(run_cli({"discover", "--help"}).code, cli::kOk);
}

TEST(Cli, SynthDeterministicAndValidated) {
  TempDir dir;
  ASSERT_EQ(run_cli({"synth", "--seed", "1", "-o", (dir / "a.csv").string()}).code, 0);
  ASSERT_EQ(run_cli({"synth", "--seed", "1", "-o", (dir / "b.csv").string()}).code, 0);
  EXPECT_EQ(read_file(dir / "a.csv"), read_file(dir / "b.csv"));
  EXPECT_EQ(read_file(dir / "a_truth.json"), read_file(dir / "b_truth.json"));

  ASSERT_EQ(run_cli({"synth", "--length", "400", "--seed", "7", "-o", (dir / "c.csv").string()}).code, 0);
  const auto text = read_file(dir / "c.csv");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 400);

  EXPECT_EQ(run_cli({"synth", "--plant", "40@10,30", "-o", (dir / "d.csv").string()}).code, cli::kConfigError);
  EXPECT_EQ(run_cli({"synth", "--plant", "40@10,380", "-o", (dir / "d.csv").string()}).code, cli::kConfigError);
  EXPECT_EQ(run_cli({"synth", "--plant", "20@10,60", "--plant", "20@20,200"}).code, cli::kConfigError);
  EXPECT_EQ(run_cli({"synth", "--plant", "20@10,60", "--length", "120"}).code, cli::kOk);
}

TEST(Cli, SweepReport) {
  TempDir dir;
  ASSERT_EQ(run_cli({"synth", "--seed", "3", "-o", (dir / "w.csv").string()}).code, 0);
  const auto r = run_cli({"sweep", (dir / "w.csv").string(), "--sweep-s", "5,10,15,20", "-o",
                      (dir / "report").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto csv = read_file(dir / "report.csv");
  EXPECT_TRUE(csv.starts_with("s,r,threshold_kind,a,C1,C2,C3,C4,C5,C6,C7,C8,MQ,ME,error\n"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  const auto json = nlohmann::json::parse(read_file(dir / "report.json"));
  ASSERT_EQ(json.size(), 4u);
  EXPECT_EQ(json[2].at("s"), 15);
  EXPECT_TRUE(json[2].contains("MQ"));

  const auto rr = run_cli({"sweep", (dir / "w.csv").string(), "--sweep-r", "0.3,0.4,0.5,0.6,0.7,0.8",
                       "--format", "json"});
  ASSERT_EQ(rr.code, 0) << rr.err;
  const auto rows = nlohmann::json::parse(rr.out);
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].at("C5").get<double>(), rows[i - 1].at("C5").get<double>());
  }

  EXPECT_EQ(run_cli({"sweep", (dir / "w.csv").string()}).code, cli::kConfigError);
  const auto mixed = run_cli({"sweep", (dir / "w.csv").string(), "--sweep-a", "6,40"});
  EXPECT_EQ(mixed.code, 0);
  EXPECT_NE(mixed.err.find("alphabet"), std::string::npos);
}

TEST(Cli, OverlayFromCatalog) {
  TempDir dir;
  ASSERT_EQ(run_cli({"synth", "--seed", "1", "-o", (dir / "w.csv").string()}).code, 0);
  ASSERT_EQ(run_cli({"discover", (dir / "w.csv").string(), "-o", (dir / "cat.json").string()}).code, 0);
  const auto ok = run_cli({"overlay", (dir / "cat.json").string(), (dir / "w.csv").string(), "--motif", "0"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(ok.out.starts_with("t,occurrence_1,occurrence_2"));
  EXPECT_EQ(run_cli({"overlay", (dir / "cat.json").string(), (dir / "w.csv").string(), "--motif", "9999"}).code,
            cli::kConfigError);
}

TEST(Cli, DiscoverIsDeterministic) {
  TempDir dir;
  ASSERT_EQ(run_cli({"synth", "--seed", "8", "-o", (dir / "w.csv").string()}).code, 0);
  ASSERT_EQ(run_cli({"discover", (dir / "w.csv").string(), "-o", (dir / "a.json").string()}).code, 0);
  ASSERT_EQ(run_cli({"discover", (dir / "w.csv").string(), "-o", (dir / "b.json").string()}).code, 0);
  const auto a = io::strip_timing(nlohmann::json::parse(read_file(dir / "a.json")));
  const auto b = io::strip_timing(nlohmann::json::parse(read_file(dir / "b.json")));
  EXPECT_EQ(a.dump(2), b.dump(2));
  EXPECT_FALSE(a.contains("timing"));
}
