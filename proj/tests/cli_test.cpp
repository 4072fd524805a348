#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "report_document.hpp"

namespace normplane::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("normplane_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, DocumentedExamples) {
  auto r = invoke({"james", "--norm", "hexagon-paper", "--exact"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "22/13\n");

  r = invoke({"partner", "--norm", "hexagon-paper", "--point", "1,-1", "--exact"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "(9/13, 21/13)\n");

  r = invoke({"beta", "--norm", "square", "--point", "1,0"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "1\n");

  r = invoke({"modulus", "--norm", "euclidean", "--epsilon", "1"});
  EXPECT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  bool found = false;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("delta ", 0) == 0) {
      found = true;
      EXPECT_NEAR(std::stod(line.substr(6)), 1 - std::sqrt(3.0) / 2, 1e-6);
    }
  }
  EXPECT_TRUE(found) << r.out;
}

TEST(Cli, ExactOperations) {
  EXPECT_EQ(invoke({"gauge", "--norm", "hexagon-paper", "--point", "3/2,12/7", "--exact"}).out, "11/7\n");
  EXPECT_EQ(invoke({"beta", "--norm", "hexagon-paper", "--point", "1,1", "--exact"}).out, "22/17\n");
  // Non-unit points are scaled: the partner of 2x is 2 * partner(x).
  EXPECT_EQ(invoke({"partner", "--norm", "hexagon-paper", "--point", "2,-2", "--exact"}).out, "(18/13, 42/13)\n");
  EXPECT_EQ(invoke({"partner", "--norm", "hexagon-paper", "--point", "0.5,2", "--exact"}).out, "(-1, 2/7)\n");
  const auto r = invoke({"attain", "--norm", "hexagon-paper", "--exact"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "x=(-1, 1) y=(-9/13, -21/13) value=22/13 iso_defect=0\n");
}

TEST(Cli, FloatOperations) {
  EXPECT_EQ(invoke({"james", "--norm", "hexagon-paper"}).out, "1.69230769230769\n");
  EXPECT_EQ(invoke({"james", "--norm", "square"}).out, "2\n");
  EXPECT_EQ(invoke({"schaffer", "--norm", "square"}).out, "1\n");
  const auto j = invoke({"james", "--norm", "euclidean", "--lambda", "0.2"});
  EXPECT_NEAR(std::stod(j.out), std::sqrt(0.04 + 0.64), 1e-6);
  const auto a = invoke({"aset", "--norm", "euclidean", "--point", "1,0", "--epsilon", "0.5", "--format", "json"});
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_NEAR(json::parse(a.out)["angular_width"].get<double>(), std::numbers::pi / 3, 1e-9);
  const auto p = invoke({"partner", "--norm", "square", "--point", "1,0", "--radius", "2"});
  double px = 0, py = 0;
  ASSERT_EQ(std::sscanf(p.out.c_str(), "(%lf, %lf)", &px, &py), 2) << p.out;
  EXPECT_NEAR(px, 0.0, 1e-9);
  EXPECT_NEAR(py, 2.0, 1e-9);
  EXPECT_NE(p.out.find("plateau ["), std::string::npos);
}

TEST(Cli, JsonScalarCarriesProvenance) {
  const auto r = invoke({"james", "--norm", "hexagon-paper", "--exact", "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["exact"], "22/13");
  EXPECT_EQ(j["mode"], "both");
  EXPECT_NEAR(j["value"].get<double>(), 22.0 / 13, 1e-9);
  EXPECT_EQ(j["norm"]["preset"], "hexagon-paper");
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(invoke({"james"}).status, 2);                                        // missing --norm
  EXPECT_EQ(invoke({"--norm", "square"}).status, 2);                             // missing subcommand
  EXPECT_EQ(invoke({"frobnicate", "--norm", "square"}).status, 2);               // unknown subcommand
  EXPECT_EQ(invoke({"james", "--norm", "/nonexistent/norm.json"}).status, 2);    // file not found
  EXPECT_EQ(invoke({"james", "--norm", "euclidean", "--exact"}).status, 2);      // irrational spec
  EXPECT_EQ(invoke({"schaffer", "--norm", "square", "--exact"}).status, 2);      // no exact path
  EXPECT_EQ(invoke({"beta", "--norm", "square"}).status, 2);                     // missing --point
  EXPECT_EQ(invoke({"beta", "--norm", "square", "--point", "1;0"}).status, 2);   // malformed point
  EXPECT_EQ(invoke({"beta", "--norm", "square", "--point", "0,0"}).status, 2);   // zero vector
  EXPECT_EQ(invoke({"james", "--norm", "square", "--format", "xml"}).status, 2);
  EXPECT_EQ(invoke({"james", "--norm", "square", "--lambda", "1.5"}).status, 2);
  EXPECT_EQ(invoke({"modulus", "--norm", "square", "--epsilon", "3"}).status, 2);
  EXPECT_EQ(invoke({"aset", "--norm", "square", "--point", "1,0", "--epsilon", "1"}).status, 2);
  EXPECT_EQ(invoke({"james", "--norm", "square", "--grid", "4"}).status, 2);
  EXPECT_EQ(invoke({"plot", "--norm", "square", "--overlay", "sparkles"}).status, 2);
  EXPECT_EQ(invoke({"partner", "--norm", "square", "--point", "1,0", "--radius", "-1"}).status, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("partner"), std::string::npos);
}

TEST(Cli, ParseErrorsReportLineAndColumn) {
  TempDir dir;
  const auto path = dir.write("bad.json", "{\"kind\": \"polygon\",\n  \"vertices\": [[1, 0], [0 1]]}\n");
  const auto r = invoke({"james", "--norm", path});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find(path + ":2:27:"), std::string::npos) << r.err;
}

TEST(Cli, NormSpecDocuments) {
  TempDir dir;
  const auto hex = dir.write("hex.json", R"({"kind": "polygon", "vertices": [[1, -1], [1, 1], ["1/2", 2]]})");
  EXPECT_EQ(invoke({"james", "--norm", hex, "--exact"}).out, "22/13\n");

  const auto decimal = dir.write("dec.json", R"({"kind": "polygon", "vertices": [[1, -1], [1, 1], [0.5, 2]]})");
  EXPECT_EQ(invoke({"james", "--norm", decimal}).out, "1.69230769230769\n");
  EXPECT_EQ(invoke({"james", "--norm", decimal, "--exact"}).status, 2);

  const auto linf = dir.write("linf.json", R"({"kind": "lp", "p": "inf"})");
  EXPECT_EQ(invoke({"james", "--norm", linf, "--exact"}).out, "2\n");
  const auto l1 = dir.write("l1.json", R"({"kind": "lp", "p": 1})");
  EXPECT_EQ(invoke({"james", "--norm", l1, "--exact"}).out, "2\n");
  const auto l2 = dir.write("l2.json", R"({"kind": "lp", "p": 2})");
  EXPECT_NEAR(std::stod(invoke({"james", "--norm", l2}).out), std::numbers::sqrt2, 1e-9);

  const auto reg = dir.write("reg.json", R"({"kind": "regular-polygon", "sides": 8, "rotation": 0.39269908169872414})");
  EXPECT_NEAR(std::stod(invoke({"james", "--norm", reg}).out), std::numbers::sqrt2, 1e-9);
  const auto preset = dir.write("preset.json", R"({"kind": "preset", "preset": "octagon-max"})");
  EXPECT_NEAR(std::stod(invoke({"james", "--norm", preset}).out), std::numbers::sqrt2, 1e-9);

  for (const char* bad : {R"({"kind": "polygon"})", R"({"kind": "polygon", "vertices": [[1, 0], [0, 1]], "p": 2})",
                          R"({"kind": "lp", "p": "two"})", R"({"kind": "regular-polygon", "sides": 7})",
                          R"({"kind": "regular-polygon", "sides": 8.5})", R"({"kind": "preset", "preset": "circle"})",
                          R"({"kind": "ellipse"})", R"([1, 2])", R"({"kind": "polygon", "vertices": [[1, 0], [2, 0]]})",
                          R"({"kind": "polygon", "vertices": [["1/0", 1], [0, 1]]})"}) {
    const auto path = dir.write("bad.json", bad);
    const auto r = invoke({"james", "--norm", path});
    EXPECT_EQ(r.status, 2) << bad << "\n" << r.out;
  }
}

TEST(Cli, CheckPassesOnPresets) {
  for (const char* preset : {"hexagon-paper", "octagon-max", "square", "euclidean"}) {
    const auto r = invoke({"check", "--norm", preset});
    EXPECT_EQ(r.status, 0) << preset << "\n" << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  }
}

TEST(Cli, ModulusCsvIsIncreasingInEpsilon) {
  const auto r = invoke({"modulus", "--norm", "hexagon-paper", "--format", "csv"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "epsilon,delta,rho,rho_prime");
  double previous = -1;
  int rows = 0;
  while (std::getline(lines, line)) {
    const double e = std::stod(line.substr(0, line.find(',')));
    EXPECT_GT(e, previous);
    previous = e;
    ++rows;
  }
  EXPECT_EQ(rows, 19);
}

TEST(Cli, OutputIsByteIdentical) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"modulus", "--norm", "octagon-max", "--format", "csv"},
        std::vector<std::string>{"attain", "--norm", "euclidean", "--epsilon", "1", "--grid", "256"},
        std::vector<std::string>{"plot", "--norm", "hexagon-paper", "--point", "1,-1", "--epsilon", "0.3"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

TEST(Cli, ReportRoundTrips) {
  TempDir dir;
  const auto path = dir.path("report.json");
  const auto r = invoke({"report", "--norm", "hexagon-paper", "--exact", "--out", path});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const json parsed = json::parse(slurp(path));
  const auto doc = parsed.get<ReportDocument>();
  EXPECT_EQ(json(doc), parsed);
  EXPECT_EQ(json(doc).get<ReportDocument>(), doc);

  EXPECT_EQ(doc.mode, "both");
  ASSERT_TRUE(doc.james.exact.has_value());
  EXPECT_EQ(*doc.james.exact, "22/13");
  EXPECT_NEAR(doc.james.value, 22.0 / 13, 1e-9);
  EXPECT_EQ(doc.james_generalized.size(), 5u);
  EXPECT_EQ(doc.curves.epsilon.size(), 19u);
  for (std::size_t i = 1; i < doc.curves.epsilon.size(); ++i) EXPECT_GT(doc.curves.epsilon[i], doc.curves.epsilon[i - 1]);
  EXPECT_FALSE(doc.attainment.empty());
  EXPECT_FALSE(doc.checks.empty());
  for (const auto& c : doc.checks) EXPECT_TRUE(c.passed) << c.name;
  EXPECT_EQ(doc.config.directions, 4096);
}

TEST(Cli, ReportCsvMatchesCurves) {
  const auto r = invoke({"report", "--norm", "square", "--format", "csv"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "epsilon,delta,rho,rho_prime");
}

TEST(Cli, PlotWritesSvg) {
  TempDir dir;
  const auto path = dir.path("sphere.svg");
  const auto r =
      invoke({"plot", "--norm", "hexagon-paper", "--point", "1,-1", "--epsilon", "0.3", "--out", path});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto svg = slurp(path);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(svg.find("<polygon"), std::string::npos);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");

  const auto bare = invoke({"plot", "--norm", "euclidean", "--overlay", "none"});
  EXPECT_EQ(bare.out.find("<circle"), std::string::npos);
}

}  // namespace
}  // namespace normplane::cli
