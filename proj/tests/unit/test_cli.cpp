#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "gasket/exact.hpp"
#include "gasket/sampler.hpp"
#include "render.hpp"

using namespace gasket;
using namespace gasket::cli;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gasket_cli_test_" + name);
}

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "gasket");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli_dispatch(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Runs a command with --out into a scratch file and returns the output.
std::string run_to_string(std::vector<std::string> args, int expected_code = kExitOk) {
  auto path = scratch("out");
  args.push_back("--out");
  args.push_back(path.string());
  EXPECT_EQ(run(args), expected_code);
  std::string text = slurp(path);
  std::filesystem::remove(path);
  return text;
}

}  // namespace

TEST(Render, TreeHasOneSegmentPerEdge) {
  ForestSample s = sample_spanning_tree(5, RngStream(1));
  std::string svg = render_forest_svg(s.forest);
  // |V| - 1 with |V| = (3/2)(3^5 + 1).
  EXPECT_EQ(occurrences(svg, "<line"), 365u);
}

TEST(Render, EmptyForestIsOutlineOnly) {
  ForestSample s = sample_forest(ForestClass::R, 0, RngStream(0));
  std::string svg = render_forest_svg(s.forest);
  EXPECT_EQ(occurrences(svg, "<line"), 0u);
  EXPECT_EQ(occurrences(svg, "<polygon"), 1u);
}

TEST(Cli, SvgIsByteIdenticalForEqualSeeds) {
  std::string a = run_to_string({"sample-tree", "--level", "4", "--seed", "3", "--format", "svg"});
  std::string b = run_to_string({"sample-tree", "--level", "4", "--seed", "3", "--format", "svg"});
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  std::string c = run_to_string({"sample-tree", "--level", "4", "--seed", "4", "--format", "svg"});
  EXPECT_NE(a, c);
}

TEST(Cli, LerwSvgIsAPolyline) {
  std::string svg = run_to_string({"sample-lerw", "--level", "8", "--seed", "7", "--format", "svg"});
  EXPECT_EQ(occurrences(svg, "<polyline"), 1u);
  EXPECT_EQ(occurrences(svg, "<polygon"), 1u);
}

TEST(Cli, CountIsExactDecimalStrings) {
  auto doc = nlohmann::json::parse(run_to_string({"count", "--level", "3"}));
  ASSERT_TRUE(doc.contains("tau"));
  for (const char* key : {"tau", "sigma", "rho", "spanning_trees"}) EXPECT_TRUE(doc[key].is_string()) << key;
  EXPECT_EQ(count_forests(3).tau.get_str(), doc["tau"].get<std::string>());
  EXPECT_EQ(doc["config"]["level"], 3);
}

TEST(Cli, ConstantsIncludePathDimension) {
  auto doc = nlohmann::json::parse(run_to_string({"constants"}));
  ASSERT_TRUE(doc.contains("dim_H_path"));
  EXPECT_NEAR(doc["dim_H_path"].get<double>(), 1.193995, 1e-6);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"no-such-command"}), kExitUsage);
  EXPECT_EQ(run({"count", "--level", "-1"}), kExitUsage);
  EXPECT_EQ(run({"sample-forest", "--class", "Q"}), kExitUsage);
  EXPECT_EQ(run({"sample-tree", "--level", "20", "--format", "svg", "--out", scratch("big").string()}), kExitUsage);
  EXPECT_EQ(run({"count", "--cell", "/nonexistent/cell.json"}), kExitUsage);
}

TEST(Cli, ValidateSelectedCriterion) {
  auto doc = nlohmann::json::parse(run_to_string({"validate", "--only", "1"}));
  ASSERT_TRUE(doc.contains("criteria"));
  ASSERT_EQ(doc["criteria"].size(), 1u);
  EXPECT_TRUE(doc["criteria"][0]["pass"].get<bool>());
}

TEST(Cli, CsvLengthLaw) {
  std::string csv = run_to_string({"length-dist", "--level", "0", "--format", "csv"});
  EXPECT_NE(csv.find("\n1,2,3,"), std::string::npos) << csv;
  EXPECT_NE(csv.find("\n2,1,3,"), std::string::npos) << csv;
}
