#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "geninv/fixtures.hpp"
#include "geninv/io.hpp"
#include "support.hpp"

namespace geninv {
namespace {

namespace fs = std::filesystem;
namespace fx = fixtures;
using testing::q;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("geninv_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }
  std::string function_file(const std::string& name, const PiecewiseMonotone& f) { return file(name, io::emit(f)); }

  static Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "geninv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

TEST_F(Cli, Validate) {
  const auto ok = run({"validate", function_file("f2.json", fx::f2())});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(canonical_equal(io::parse_function(ok.out), fx::f2()));
  const auto dec = run({"validate", file("dec.json", R"({"breakpoints":[],"segments":[{"slope":"-1","intercept":"0"}]})")});
  EXPECT_EQ(dec.code, 2);
  EXPECT_NE(dec.err.find("MonotonicityViolation"), std::string::npos);
  EXPECT_NE(dec.err.find("segment 0"), std::string::npos);
  const auto bad = run({"validate", file("bad.json", "{\"breakpoints\": [")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("ParseError"), std::string::npos);
  EXPECT_EQ(run({"validate", (dir_ / "missing.json").string()}).code, 2);
}

TEST_F(Cli, Invert) {
  const auto id = run({"invert", function_file("id.json", fx::identity()), "--plus"});
  EXPECT_EQ(id.code, 0);
  EXPECT_TRUE(canonical_equal(io::parse_ext_function(id.out), to_ext(fx::identity())));
  const auto f3 = run({"invert", function_file("f3.json", fx::f3()), "--plus"});
  EXPECT_TRUE(canonical_equal(io::parse_ext_function(f3.out), invert_plus(fx::f3())));
  const auto g = io::parse_ext_function(f3.out);
  EXPECT_EQ(g.eval(-1), ExtReal(q(-1)));
  EXPECT_EQ(g.eval(0), ExtReal(q(1)));
  const auto f2 = run({"invert", function_file("f2.json", fx::f2()), "--minus"});
  const auto h = io::parse_ext_function(f2.out);
  EXPECT_EQ(h.eval(0), ExtReal::neg_inf());
  EXPECT_EQ(h.eval(q(1, 2)), ExtReal(q(0)));
  EXPECT_EQ(h.eval(1), ExtReal(q(0)));
  EXPECT_EQ(h.eval(2), ExtReal::pos_inf());
  EXPECT_EQ(run({"invert", function_file("x.json", fx::f2()), "--plus", "--minus"}).code, 2);
}

TEST_F(Cli, Eval) {
  const auto f2 = function_file("f2.json", fx::f2());
  EXPECT_EQ(run({"eval", f2, "--at", "0"}).out, "1\n");
  EXPECT_EQ(run({"eval", f2, "--at", "0", "--left"}).out, "0\n");
  EXPECT_EQ(run({"eval", function_file("f3.json", fx::f3()), "--at", "1/2"}).out, "0\n");
  const auto inv = file("inv.json", io::emit(invert_minus(fx::f2())));
  EXPECT_EQ(run({"eval", inv, "--at", "0"}).out, "-inf\n");
  EXPECT_EQ(run({"eval", f2, "--at", "zero"}).code, 2);
}

TEST_F(Cli, Compose) {
  const auto f4 = run({"compose", function_file("f4.json", fx::f4()), "--check-lemma4"});
  EXPECT_EQ(f4.code, 0);
  EXPECT_EQ(io::json::parse(f4.out)["mismatches"], 0);
  const auto f5 = run({"compose", function_file("f5.json", fx::f5()), "--check-lemma4"});
  EXPECT_EQ(f5.code, 0);
  const auto doc = io::json::parse(f5.out);
  EXPECT_EQ(doc["mismatches"], 0);
  for (const auto& r : doc["reports"]) EXPECT_FALSE(r["excluded"].empty());
  const auto right = run({"compose", function_file("f5b.json", fx::f5()), "--check-lemma5", "right"});
  EXPECT_EQ(right.code, 2);
  EXPECT_NE(right.err.find("NotOneSidedContinuous"), std::string::npos);
  EXPECT_EQ(run({"compose", function_file("f2.json", fx::f2()), "--check-lemma5", "right"}).code, 0);
  EXPECT_EQ(run({"compose", function_file("f2b.json", fx::f2())}).code, 2);
  EXPECT_EQ(run({"compose", function_file("f2c.json", fx::f2()), "--check-lemma5", "up"}).code, 2);
}

TEST_F(Cli, Check) {
  const auto all = run({"check", "--seed", "42", "--cases", "100"});
  EXPECT_EQ(all.code, 0) << all.out.substr(0, 2000);
  EXPECT_EQ(io::json::parse(all.out)["violations"], 0);
  const auto one = run({"check", "--cases", "5", "--only", "L1.v"});
  EXPECT_EQ(one.code, 0);
  const auto doc = io::json::parse(one.out);
  ASSERT_EQ(doc["results"].size(), 1u);
  EXPECT_EQ(doc["results"][0]["id"], "L1.v");
  const auto bogus = run({"check", "--only", "bogus"});
  EXPECT_EQ(bogus.code, 2);
  EXPECT_NE(bogus.err.find("UnknownProperty"), std::string::npos);
}

TEST_F(Cli, SeedFromEnvironment) {
  ::setenv("GENINV_SEED", "7", 1);
  const auto doc = io::json::parse(run({"check", "--cases", "1", "--only", "L1.v"}).out);
  ::unsetenv("GENINV_SEED");
  EXPECT_EQ(doc["seed"], 7);
  const auto explicit_seed = io::json::parse(run({"check", "--cases", "1", "--only", "L1.v", "--seed", "9"}).out);
  EXPECT_EQ(explicit_seed["seed"], 9);
}

TEST_F(Cli, SampleEcdfKs) {
  const auto bern = function_file("bern.json", fx::bernoulli_half_cdf());
  const auto s = run({"sample", bern, "--n", "4", "--seed", "7"});
  EXPECT_EQ(s.code, 0);
  std::istringstream lines(s.out);
  const auto values = io::read_samples(lines);
  ASSERT_EQ(values.size(), 4u);
  for (const auto& v : values) EXPECT_TRUE(v == 0 || v == 1);
  EXPECT_EQ(run({"sample", bern, "--n", "4", "--seed", "7"}).out, s.out);
  EXPECT_EQ(run({"sample", function_file("id.json", fx::identity()), "--n", "1"}).code, 2);

  const auto e = run({"ecdf", file("data.txt", "0\n1\n")});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(canonical_equal(io::parse_function(e.out), fx::bernoulli_half_cdf()));
  EXPECT_EQ(run({"ecdf", file("empty.txt", "")}).code, 2);

  const auto f2 = function_file("f2.json", fx::f2());
  EXPECT_EQ(run({"ks", f2, f2}).out, "0\n");
  EXPECT_EQ(run({"ks", f2, bern}).out, "1/2\n");
}

TEST_F(Cli, PlotData) {
  const auto id = run({"plotdata", function_file("id.json", fx::identity()), "--xmin", "0", "--xmax", "1", "--points", "3"});
  EXPECT_EQ(id.code, 0);
  std::istringstream in(id.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    if (line.starts_with('#')) continue;
    rows.push_back(line);
  }
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    std::istringstream cells(row);
    std::string a, b, c, d;
    cells >> a >> b >> c >> d;
    EXPECT_TRUE(a == b && b == c && c == d) << row;
  }
  const auto f2 = run({"plotdata", function_file("f2.json", fx::f2()), "--xmin", "-1", "--xmax", "1", "--points", "2"});
  EXPECT_NE(f2.out.find("\n0\t1\t0\t1\n"), std::string::npos) << f2.out;
  const auto exact =
      run({"plotdata", function_file("f3.json", fx::f3()), "--xmin", "0", "--xmax", "1", "--points", "3", "--exact"});
  EXPECT_NE(exact.out.find("1/2\t0\t0\t0"), std::string::npos) << exact.out;
  EXPECT_EQ(run({"plotdata", function_file("g.json", fx::f2()), "--xmin", "1", "--xmax", "0"}).code, 2);
}

TEST_F(Cli, Usage) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("invert"), std::string::npos);
}

}  // namespace
}  // namespace geninv
