#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ehvi/ehvi2d.hpp"
#include "ehvi/ehvi3d.hpp"
#include "ehvi/oracle.hpp"
#include "ehvi/workbench/bench.hpp"
#include "ehvi/workbench/cli.hpp"
#include "ehvi/workbench/generators.hpp"
#include "ehvi/workbench/io.hpp"
#include "ehvi/workbench/schemes.hpp"
#include "ehvi/workbench/verify.hpp"
#include "test_support.hpp"

namespace {

namespace wb = ehvi::workbench;
using ehvi::GaussianPredictor;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ehvi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = wb::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::map<std::string, std::string> report_fields(const std::string& text) {
  std::map<std::string, std::string> fields;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) fields[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return fields;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ehvi_test_" + name)).string();
}

TEST(Generators, Sphere) {
  EXPECT_TRUE(wb::gen_sphere_front(0, 1.0, 1).empty());
  const auto f = wb::gen_sphere_front(100, 2.0, 9);
  EXPECT_EQ(f.size(), 100U);
  for (const auto& p : f.points()) {
    for (double c : p) {
      EXPECT_GT(c, 0.0);
      EXPECT_LT(c, 2.0);
    }
    EXPECT_NEAR(std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]), 2.0, 1e-12);
  }
  const auto g = wb::gen_sphere_front(100, 2.0, 9);
  EXPECT_EQ(f.points(), g.points());
  EXPECT_NE(f.points(), wb::gen_sphere_front(100, 2.0, 10).points());
}

TEST(Generators, Diagonal) {
  const auto f = wb::gen_diagonal_front_2d(3);
  const std::vector<ehvi::Point> expect{{1, 3}, {2, 2}, {3, 1}};
  EXPECT_EQ(f.points(), expect);
  EXPECT_EQ(f.reference(), (ehvi::Point{0, 0}));
  EXPECT_TRUE(wb::gen_diagonal_front_2d(0).empty());
}

TEST(Generators, TiedSphereSharesCoordinates) {
  const auto f = wb::gen_tied_sphere_front(30, 4, 1.0, 2);
  EXPECT_EQ(f.size(), 30U);
  std::vector<double> xs;
  for (const auto& p : f.points()) xs.push_back(p[0]);
  std::sort(xs.begin(), xs.end());
  EXPECT_LE(std::unique(xs.begin(), xs.end()) - xs.begin(), 4);
}

TEST(Generators, ThreePointPopulation) {
  const auto f = wb::three_point_front();
  const std::vector<ehvi::Point> expect{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  EXPECT_EQ(f.points(), expect);
}

TEST(Io, FormatDoubleRoundTrips) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(10.0, i % 40 - 20);
    EXPECT_EQ(std::strtod(wb::format_double(x).c_str(), nullptr), x);
  }
}

TEST(Io, CsvRoundTripIsBitExact) {
  const auto f = wb::gen_sphere_front(50, 1.0, 4);
  std::stringstream ss;
  wb::write_front_csv(ss, f);
  const auto raw = wb::read_front_csv(ss, "mem");
  ASSERT_TRUE(raw.reference.has_value());
  const auto g = ehvi::validate_front(raw.points, *raw.reference);
  EXPECT_EQ(g.points(), f.points());
  EXPECT_EQ(g.reference(), f.reference());
}

TEST(Io, MalformedCsvNamesLine) {
  std::istringstream in("# reference: 0,0\n1,2\n\n2,abc\n");
  try {
    wb::read_front_csv(in, "bad.csv");
    FAIL();
  } catch (const ehvi::Error& e) {
    EXPECT_EQ(e.kind(), ehvi::ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("bad.csv:4"), std::string::npos) << e.what();
  }
}

TEST(Io, FrontSources) {
  EXPECT_EQ(wb::load_front_source("paper3").points.size(), 3U);
  EXPECT_EQ(wb::load_front_source("diag:7").points.size(), 7U);
  EXPECT_EQ(wb::load_front_source("sphere:12:3").points.size(), 12U);
  EXPECT_EQ(wb::load_front_source("ties:12:3:2").points.size(), 12U);
  EXPECT_THROW(wb::load_front_source("diag:x"), ehvi::Error);
  EXPECT_THROW(wb::load_front_source("/nonexistent/front.csv"), ehvi::Error);
}

TEST(Io, PredictorJson) {
  std::istringstream one(R"({"mu": [1, 2], "sigma": [0.5, 0.25]})");
  const auto a = wb::read_predictors_json(one);
  ASSERT_EQ(a.size(), 1U);
  EXPECT_EQ(a[0].mu(1), 2.0);
  std::istringstream many(R"([{"mu": [1, 2], "sigma": [1, 1]}, {"mu": [3, 4], "sigma": [2, 2]}])");
  EXPECT_EQ(wb::read_predictors_json(many).size(), 2U);
  std::istringstream bad(R"({"mu": [1, 2]})");
  EXPECT_THROW(wb::read_predictors_json(bad), ehvi::Error);
  std::istringstream junk("{not json");
  EXPECT_THROW(wb::read_predictors_json(junk), ehvi::Error);
}

TEST(Schemes, Names) {
  for (const char* name : {"2d-naive", "2d-fast", "8term", "5term", "2term", "slice", "mc", "quadrature"}) {
    EXPECT_EQ(wb::to_string(wb::parse_scheme(name)), name);
  }
  EXPECT_THROW(wb::parse_scheme("4term"), ehvi::Error);
}

TEST(Schemes, DimensionMismatchRejected) {
  const auto f = wb::three_point_front();
  const std::vector<GaussianPredictor> gs{GaussianPredictor({1, 1, 1}, {1, 1, 1})};
  EXPECT_THROW(wb::evaluate(f, gs, wb::Scheme::Fast2d), ehvi::Error);
}

TEST(Schemes, ThreadedEvaluationPreservesOrder) {
  const auto f = wb::gen_sphere_front(20, 1.0, 5);
  std::mt19937_64 rng(6);
  std::vector<GaussianPredictor> gs;
  for (int i = 0; i < 37; ++i) gs.push_back(ehvi::testing::random_predictor(3, rng));
  wb::EvalOptions serial;
  wb::EvalOptions parallel;
  parallel.threads = 4;
  const auto a = wb::evaluate(f, gs, wb::Scheme::Slice, serial);
  const auto b = wb::evaluate(f, gs, wb::Scheme::Slice, parallel);
  EXPECT_EQ(a.values, b.values);
}

TEST(Cli, ComputeMatchesLibraryBitForBit) {
  const auto diag = wb::gen_diagonal_front_2d(3);
  const GaussianPredictor g2({2, 2}, {1, 1});
  const auto trio = wb::three_point_front();
  const GaussianPredictor g3({3, 3, 3}, {2, 2, 2});
  struct Case {
    std::string scheme;
    double expect;
  };
  const Case cases2[] = {{"2d-naive", ehvi::ehvi_2d_naive(diag, g2)},
                         {"2d-fast", ehvi::ehvi_2d_fast(diag, g2)},
                         {"quadrature", ehvi::ehvi_quadrature(diag, g2)},
                         {"mc", ehvi::ehvi_mc(diag, g2, 5000, 3).estimate}};
  for (const auto& c : cases2) {
    const auto run = cli({"compute", "--scheme", c.scheme, "--front", "diag:3", "--mu", "2,2",
                          "--sigma", "1,1", "--trials", "5000", "--seed", "3"});
    ASSERT_EQ(run.code, 0) << run.err;
    const auto fields = report_fields(run.out);
    EXPECT_EQ(fields.at("scheme"), c.scheme);
    EXPECT_EQ(fields.at("n"), "3");
    EXPECT_EQ(std::strtod(fields.at("ehvi[0]").c_str(), nullptr), c.expect) << c.scheme;
  }
  const Case cases3[] = {{"8term", ehvi::ehvi_3d_8term(trio, g3)},
                         {"5term", ehvi::ehvi_3d_5term(trio, g3)},
                         {"2term", ehvi::ehvi_3d_2term(trio, g3)},
                         {"slice", ehvi::ehvi_3d_slice(trio, g3)},
                         {"quadrature", ehvi::ehvi_quadrature(trio, g3)},
                         {"mc", ehvi::ehvi_mc(trio, g3, 5000, 3).estimate}};
  for (const auto& c : cases3) {
    const auto run = cli({"compute", "--scheme", c.scheme, "--front", "paper3", "--mu", "3,3,3",
                          "--sigma", "2,2,2", "--trials", "5000", "--seed", "3"});
    ASSERT_EQ(run.code, 0) << run.err;
    EXPECT_EQ(std::strtod(report_fields(run.out).at("ehvi[0]").c_str(), nullptr), c.expect)
        << c.scheme;
  }
}

TEST(Cli, MonteCarloReportsTrialsSeedAndError) {
  const auto run = cli({"compute", "--scheme", "mc", "--front", "paper3", "--mu", "3,3,3",
                        "--sigma", "2,2,2", "--trials", "1000", "--seed", "9"});
  ASSERT_EQ(run.code, 0);
  const auto fields = report_fields(run.out);
  EXPECT_EQ(fields.at("trials"), "1000");
  EXPECT_EQ(fields.at("seed"), "9");
  EXPECT_EQ(std::strtod(fields.at("stderr[0]").c_str(), nullptr),
            ehvi::ehvi_mc(wb::three_point_front(), GaussianPredictor({3, 3, 3}, {2, 2, 2}), 1000, 9)
                .standard_error);
}

TEST(Cli, MinimizeNegatesInputs) {
  const std::string path = temp_path("min.csv");
  {
    std::ofstream f(path);
    f << "# reference: 0,0\n-1,-2\n-2,-1\n";
  }
  const auto run = cli({"compute", "--scheme", "2d-fast", "--front", path, "--mu", "-2,-2",
                        "--sigma", "1,1", "--minimize"});
  ASSERT_EQ(run.code, 0) << run.err;
  const auto f = ehvi::validate_front({{1, 2}, {2, 1}}, {0, 0});
  EXPECT_EQ(std::strtod(report_fields(run.out).at("ehvi[0]").c_str(), nullptr),
            ehvi::ehvi_2d_fast(f, GaussianPredictor({2, 2}, {1, 1})));
}

TEST(Cli, ReferenceFlagWinsOverHeader) {
  const std::string path = temp_path("ref.csv");
  {
    std::ofstream f(path);
    f << "# reference: 0,0\n1,2\n2,1\n";
  }
  const auto run = cli({"compute", "--scheme", "2d-fast", "--front", path, "--ref", "-1,-1",
                        "--mu", "2,2", "--sigma", "1,1"});
  ASSERT_EQ(run.code, 0) << run.err;
  const auto f = ehvi::validate_front({{1, 2}, {2, 1}}, {-1, -1});
  EXPECT_EQ(std::strtod(report_fields(run.out).at("ehvi[0]").c_str(), nullptr),
            ehvi::ehvi_2d_fast(f, GaussianPredictor({2, 2}, {1, 1})));
}

TEST(Cli, PredictorFileBatch) {
  const std::string path = temp_path("preds.json");
  {
    std::ofstream f(path);
    f << R"([{"mu": [3, 3, 3], "sigma": [2, 2, 2]}, {"mu": [1, 1, 1], "sigma": [0.5, 0.5, 0.5]}])";
  }
  const auto run = cli({"compute", "--scheme", "slice", "--front", "paper3", "--predictors", path,
                        "--threads", "2"});
  ASSERT_EQ(run.code, 0) << run.err;
  const auto fields = report_fields(run.out);
  const auto trio = wb::three_point_front();
  EXPECT_EQ(std::strtod(fields.at("ehvi[0]").c_str(), nullptr),
            ehvi::ehvi_3d_slice(trio, GaussianPredictor({3, 3, 3}, {2, 2, 2})));
  EXPECT_EQ(std::strtod(fields.at("ehvi[1]").c_str(), nullptr),
            ehvi::ehvi_3d_slice(trio, GaussianPredictor({1, 1, 1}, {0.5, 0.5, 0.5})));
}

TEST(Cli, ExitCodes) {
  const std::string bad = temp_path("bad.csv");
  {
    std::ofstream f(bad);
    f << "# reference: 0,0\n1,2\n2;1\n";
  }
  auto run = cli({"compute", "--scheme", "2d-fast", "--front", bad, "--mu", "1,1", "--sigma", "1,1"});
  EXPECT_EQ(run.code, wb::kExitInputError);
  EXPECT_NE(run.err.find(":3"), std::string::npos) << run.err;

  const std::string dominated = temp_path("dominated.csv");
  {
    std::ofstream f(dominated);
    f << "# reference: 0,0\n1,2\n2,3\n";
  }
  run = cli({"compute", "--scheme", "2d-fast", "--front", dominated, "--mu", "1,1", "--sigma", "1,1"});
  EXPECT_EQ(run.code, wb::kExitInputError);
  EXPECT_NE(run.err.find("DominatedMember"), std::string::npos) << run.err;

  run = cli({"compute", "--scheme", "slice", "--front", "diag:3", "--mu", "1,1", "--sigma", "1,1"});
  EXPECT_EQ(run.code, wb::kExitInputError);
  EXPECT_NE(run.err.find("DimensionMismatch"), std::string::npos) << run.err;

  run = cli({"compute", "--scheme", "2d-fast", "--front", "diag:3", "--mu", "1,1", "--sigma", "1,0"});
  EXPECT_EQ(run.code, wb::kExitInputError);
  EXPECT_NE(run.err.find("InvalidPredictor"), std::string::npos) << run.err;

  run = cli({"compute", "--front", "diag:3"});
  EXPECT_EQ(run.code, wb::kExitInputError);

  run = cli({"frobnicate"});
  EXPECT_EQ(run.code, wb::kExitInputError);

  run = cli({"compute", "--scheme", "quadrature", "--front", "paper3", "--mu", "3,3,3", "--sigma",
             "2,2,2", "--cells", "4"});
  EXPECT_EQ(run.code, wb::kExitNoConvergence);
  EXPECT_NE(run.err.find("ConvergenceFailure"), std::string::npos) << run.err;
}

TEST(Verify, ThreePointPopulationPasses) {
  const auto run = cli({"verify", "--front", "paper3", "--mu", "3,3,3", "--sigma", "2,2,2",
                        "--trials", "200000"});
  EXPECT_EQ(run.code, 0) << run.out;
  EXPECT_EQ(report_fields(run.out).at("result"), "PASS");
}

TEST(Verify, EmptyFrontPasses) {
  const auto f = ehvi::validate_front({}, {0, 0, 0});
  const auto report = wb::run_verification(f, GaussianPredictor({0, 0, 0}, {1, 1, 1}), 100000, 2);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.max_relative_deviation, 0.0);
}

TEST(Verify, CorruptedSchemeFails) {
  const auto f = wb::three_point_front();
  const GaussianPredictor g({3, 3, 3}, {2, 2, 2});
  auto schemes = wb::exact_schemes_for(3);
  schemes.push_back({"corrupted", [](const ehvi::Front& front, const GaussianPredictor& p) {
                       return ehvi::ehvi_3d_slice(front, p) * (1.0 + 1e-9);
                     }});
  const auto report = wb::run_verification(f, g, 100000, 1, schemes);
  EXPECT_FALSE(report.passed);
  EXPECT_GT(report.max_relative_deviation, wb::kMaxExactDeviation);

  auto biased = wb::exact_schemes_for(3);
  for (auto& s : biased) {
    s.fn = [](const ehvi::Front& front, const GaussianPredictor& p) {
      return ehvi::ehvi_3d_8term(front, p) * 1.05;
    };
  }
  const auto shifted = wb::run_verification(f, g, 100000, 1, biased);
  EXPECT_FALSE(shifted.passed);
  EXPECT_EQ(shifted.max_relative_deviation, 0.0);
  EXPECT_GT(std::abs(shifted.z_score), wb::kMaxZScore);
}

TEST(Bench, ShapeAndValues) {
  wb::BenchRequest req;
  req.sizes = {10, 20, 40};
  req.schemes = {wb::Scheme::Naive2d, wb::Scheme::Fast2d};
  req.repetitions = 2;
  const auto records = wb::run_bench(req);
  ASSERT_EQ(records.size(), 6U);
  for (const auto& r : records) {
    EXPECT_GT(r.mean_seconds, 0.0);
    EXPECT_GT(r.min_seconds, 0.0);
    EXPECT_LE(r.min_seconds, r.mean_seconds);
    EXPECT_EQ(r.repetitions, 2U);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(records[i].n, records[i + 3].n);
    EXPECT_LE(ehvi::testing::rel_diff(records[i].value, records[i + 3].value), 1e-12);
  }
  std::ostringstream csv;
  wb::write_bench_csv(csv, records);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "scheme,n,repetitions,mean_seconds,min_seconds,value");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 6);
}

TEST(Bench, RejectsBadRequests) {
  wb::BenchRequest req;
  req.schemes = {wb::Scheme::Fast2d};
  EXPECT_THROW(wb::run_bench(req), ehvi::Error);
  req.sizes = {4};
  req.repetitions = 0;
  EXPECT_THROW(wb::run_bench(req), ehvi::Error);
}

TEST(Cli, GenWritesReadableCsv) {
  const auto run = cli({"gen", "--front", "sphere:10:4"});
  ASSERT_EQ(run.code, 0);
  std::istringstream in(run.out);
  const auto raw = wb::read_front_csv(in, "gen");
  EXPECT_EQ(raw.points, wb::gen_sphere_front(10, 1.0, 4).points());
}

}  // namespace
