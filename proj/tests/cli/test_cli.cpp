#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "beta_spec.hpp"
#include "negbeta/error.hpp"
#include "negbeta/words.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(NEGBETA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(BetaSpec, Forms) {
  using namespace negbeta;
  EXPECT_EQ(cli::parse_beta("5/4").field().gen().floor(), 1);
  EXPECT_TRUE(cli::parse_beta("1.25").field().gen() == cli::parse_beta("5/4").field().from_rational(Rational(5, 4)));
  EXPECT_EQ(cli::parse_beta("minpoly:-1,-1,1@1,2").field().degree(), 2);
  EXPECT_EQ(cli::parse_beta("minpoly:-1,-1,0,0,1").field().degree(), 4);
  EXPECT_FALSE(cli::parse_beta("approx:1.2207").is_exact());
  RealInterval iv = cli::parse_beta("approx:1.2207").beta_interval();
  EXPECT_EQ(iv.lo(), Rational(24413, 20000));
  EXPECT_EQ(iv.hi(), Rational(4883, 4000));
  EXPECT_EQ(run("expand --beta approx:1.25000000000000000000000000000000 --x 1 --n 4").out.substr(0, 4), "2112");
  EXPECT_THROW(cli::parse_beta("1/2"), Error);
  EXPECT_THROW(cli::parse_beta("minpoly:-1,-1,1@2,3"), Error);
  EXPECT_THROW(cli::parse_beta("x"), Error);
}

TEST(Cli, ExpandFiveQuarters) {
  CliRun r = run("expand --beta 5/4 --x 1 --n 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2112\n");
}

TEST(Cli, ExpandGoldenRatio) {
  CliRun r = run("expand --beta minpoly:-1,-1,1@1,2 --n 8");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "21111111\n");
}

TEST(Cli, ExpandJson) {
  CliRun r = run("expand --beta 1.25 --n 4 --json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["word"], "2112");
  EXPECT_EQ(j["digits"], nlohmann::json::parse("[2,1,1,2]"));
}

TEST(Cli, DomainErrorExitsTwo) {
  EXPECT_EQ(run("expand --beta 3/2 --x 0 --n 3").code, 2);
  EXPECT_EQ(run("classify --beta 1/2").code, 2);
}

TEST(Cli, NumericAmbiguityExitsThree) {
  // beta in [1.45, 1.55] puts beta * 2/3 on both sides of 1
  EXPECT_EQ(run("expand --beta approx:1.5 --x 2/3 --n 2").code, 3);
}

TEST(Cli, ClassifyJson) {
  CliRun r = run("classify --beta 9/8");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["gamma_n"], 3);
  EXPECT_EQ(j["gap_count"], 5);
  EXPECT_TRUE(j["brackets"].contains("gamma_4"));
}

TEST(Cli, GapsCsvColumns) {
  CliRun r = run("gaps --beta 5/4 --csv --digits 8");
  ASSERT_EQ(r.code, 0);
  auto rows = csv(r.out);
  ASSERT_GE(rows.size(), 6u);
  EXPECT_EQ(rows[0][0], "kind");
  EXPECT_EQ(rows[0][6], "hi_orbit_index");
  EXPECT_EQ(rows[1][0], "G");
  EXPECT_EQ(rows[1][3], "0.06250000");
  EXPECT_EQ(rows[1][4], "0.75000000");
  EXPECT_EQ(rows[1][5], "2");
  EXPECT_EQ(rows[1][6], "1");
}

TEST(Cli, DensityCsv) {
  CliRun r = run("density --beta 5/4 --bins 64 --method all --iters 20000");
  ASSERT_EQ(r.code, 0);
  auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 65u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "series", "ulam", "birkhoff"}));
  CliRun single = run("density --beta 5/4 --bins 32 --method series");
  EXPECT_EQ(csv(single.out)[0], (std::vector<std::string>{"x", "series"}));
  EXPECT_EQ(run("density --beta 5/4 --bins 32 --method nope").code, 2);
}

TEST(Cli, YrrapQuartic) {
  CliRun r = run("yrrap --minpoly -1,-1,0,0,1 --bracket 1,2 --certify-aperiodic pos");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["yrrap"]["p"], 5);
  EXPECT_EQ(j["yrrap"]["q"], 5);
  EXPECT_TRUE(j["parry"].is_null());
  EXPECT_EQ(j["perron"]["primitive"], true);
  EXPECT_EQ(j["certificate"]["n"], 35);
}

TEST(Cli, YrrapSeptic) {
  CliRun r = run("yrrap --minpoly -1,0,0,0,0,0,-1,1 --bracket 1,2 --certify-aperiodic neg --max-steps 2000");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["yrrap"].is_null());
  EXPECT_EQ(j["parry"]["finite"], 7);
  EXPECT_TRUE(j["matrix"].is_null());
  EXPECT_LE(j["certificate"]["n"].get<int>(), 53);
}

TEST(Cli, Identities) {
  CliRun r = run("identities --n 4");
  ASSERT_EQ(r.code, 0);
  for (const auto& e : nlohmann::json::parse(r.out)) EXPECT_TRUE(e["pass"].get<bool>()) << e.dump();
}

TEST(Cli, LimitWord) {
  EXPECT_EQ(run("limit-word").out, "211222112112112221122\n");
  EXPECT_EQ(run("limit-word --n 1").out, "2\n");
}

TEST(Cli, SweepStaircase) {
  CliRun r = run("sweep --from 1.05 --to 2 --steps 100 --threads 4 --length 256");
  ASSERT_EQ(r.code, 0);
  auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"beta", "gamma_n", "gap_count", "agreement"}));
  long prev = 1L << 40;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    long gaps = std::stol(rows[i][2]);
    EXPECT_LE(gaps, prev);
    prev = gaps;
    EXPECT_EQ(negbeta::Integer(gaps), negbeta::g(static_cast<unsigned>(std::stoul(rows[i][1]))));
  }
}

TEST(Cli, SweepAcrossGammaTwo) {
  CliRun r = run("sweep --from 1.3147 --to 1.3547 --steps 2");
  auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1][2], "2");
  EXPECT_EQ(rows[2][2], "1");
}

TEST(Cli, SweepEmptyRange) {
  CliRun r = run("sweep --from 1.5 --to 1.5 --steps 10");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "beta,gamma_n,gap_count,agreement\n");
}

TEST(Cli, Deterministic) {
  std::string args = "density --beta 9/8 --bins 32 --method birkhoff --iters 5000 --seed 3";
  EXPECT_EQ(run(args).out, run(args).out);
}
