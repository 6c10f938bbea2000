#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ppm/cli.hpp"
#include "ppm/oracle.hpp"

using namespace ppm;
using Json = nlohmann::json;

namespace {

const char* kTauF1 = "3 1 2 4 5 9 6 7 10 8 11 13 12";

std::vector<std::vector<int>> pairs(const Json& j) { return j.get<std::vector<std::vector<int>>>(); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, GoldenMatch321) {
  const auto r = run_cli({"match", "--class", "av321", "21453", kTauF1});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["contains"].get<bool>());
  EXPECT_EQ(pairs(j["embedding_values"]), (std::vector<std::vector<int>>{{2, 3}, {1, 1}, {4, 9}, {5, 10}, {3, 8}}));
  EXPECT_EQ(pairs(j["embedding_positions"]), (std::vector<std::vector<int>>{{1, 1}, {2, 2}, {3, 6}, {4, 9}, {5, 10}}));
  EXPECT_EQ(j["iterations"].get<int>(), 3);
}

TEST(Cli, GoldenMatchSkew) {
  const auto r = run_cli({"match", "--class", "skew", "1734256", "10 1 9 3 5 4 6 2 7 8"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto vm = pairs(Json::parse(r.out)["embedding_values"]);
  EXPECT_NE(std::find(vm.begin(), vm.end(), std::vector<int>{3, 3}), vm.end());
  EXPECT_NE(std::find(vm.begin(), vm.end(), std::vector<int>{4, 5}), vm.end());
}

TEST(Cli, NotFoundAndErrors) {
  const auto nf = run_cli({"match", "--class", "av321", "21", "12"});
  EXPECT_EQ(nf.exit_code, 1);
  EXPECT_FALSE(Json::parse(nf.out)["contains"].get<bool>());

  EXPECT_EQ(run_cli({"frobnicate"}).exit_code, 2);
  const auto bad_flag = run_cli({"match", "--nope", "1", "1"});
  EXPECT_EQ(bad_flag.exit_code, 2);
  EXPECT_NE(bad_flag.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run_cli({}).exit_code, 2);
  EXPECT_EQ(run_cli({"match", "1 1", "12"}).exit_code, 2);
  EXPECT_EQ(run_cli({"match", "12"}).exit_code, 2);
  EXPECT_EQ(run_cli({"match", "--class", "av321", "321", "4321"}).exit_code, 2);
  // 321 is skew-merged but 2143 is not, and 2143 avoids 321 but 321 does not.
  EXPECT_EQ(run_cli({"match", "321", "2143"}).exit_code, 2);
  EXPECT_EQ(run_cli({"match", "--class", "skew", "1", "2143"}).exit_code, 2);
  EXPECT_EQ(run_cli({"--help"}).exit_code, 0);
}

TEST(Cli, AutoClassSelection) {
  const auto a = run_cli({"match", "21", "2143"});
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(Json::parse(a.out)["algorithm"], "av321");
  const auto b = run_cli({"match", "321", "4321"});
  EXPECT_EQ(b.exit_code, 0);
  EXPECT_EQ(Json::parse(b.out)["algorithm"], "skew");
}

TEST(Cli, TraceShowsBranch) {
  const auto r = run_cli({"match", "--class", "av321", "--trace", "21345768", kTauF1});
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  const Json& fourth = j["trace"][3];
  ASSERT_EQ(fourth["produced"].size(), 2u);
  EXPECT_EQ(fourth["produced"][0]["maxval"], 9);
  EXPECT_EQ(fourth["produced"][1]["maxval"], 6);
  EXPECT_EQ(j["trace"][4]["kept"].size(), 1u);
}

TEST(Cli, FileInput) {
  const std::string path = ::testing::TempDir() + "ppm_cli_pair.txt";
  {
    std::ofstream f(path);
    f << "21453\n" << kTauF1 << "\n";
  }
  const auto r = run_cli({"match", "--file", path});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  const auto c = run_cli({"classify", "--file", path});
  ASSERT_EQ(c.exit_code, 0);
  EXPECT_EQ(Json::parse(c.out).size(), 2u);
  std::remove(path.c_str());
  EXPECT_EQ(run_cli({"match", "--file", path}).exit_code, 2);
}

TEST(Cli, ClassifyAndDecompose) {
  const auto c = run_cli({"classify", kTauF1});
  ASSERT_EQ(c.exit_code, 0);
  const Json j = Json::parse(c.out);
  EXPECT_TRUE(j["av321"].get<bool>());
  EXPECT_EQ(j["labels_321"][3], "F");
  const auto d = run_cli({"decompose", kTauF1});
  ASSERT_EQ(d.exit_code, 0);
  EXPECT_EQ(Json::parse(d.out)["blocks"].size(), 6u);
  const auto s = run_cli({"decompose", "10 1 9 3 5 4 6 2 7 8"});
  ASSERT_EQ(s.exit_code, 0);
  EXPECT_EQ(Json::parse(s.out)["skew"]["center_direction"], "decreasing");
  EXPECT_EQ(run_cli({"decompose", "3412 5"}).exit_code, 2);
}

TEST(Cli, Gen) {
  const auto ex = run_cli({"gen", "--class", "av321", "--size", "4", "--exhaustive", "--count", "3"});
  ASSERT_EQ(ex.exit_code, 0);
  EXPECT_EQ(lines(ex.out).size(), 14u);
  EXPECT_EQ(lines(run_cli({"gen", "--class", "skew", "--size", "4", "--exhaustive"}).out).size(), 22u);
  EXPECT_EQ(run_cli({"gen", "--size", "10", "--exhaustive"}).exit_code, 2);
  const auto a = run_cli({"gen", "--class", "skew", "--size", "30", "--count", "5", "--seed", "9"});
  const auto b = run_cli({"gen", "--class", "skew", "--size", "30", "--count", "5", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
  ASSERT_EQ(lines(a.out).size(), 5u);
  for (const auto& l : lines(a.out)) EXPECT_TRUE(oracle::is_skew_merged_split(parse_permutation(l)));
}

TEST(Cli, BenchRows) {
  const auto r = run_cli({"bench", "--class", "skew", "--n", "500", "2000", "--k", "5", "50", "--trials", "3",
                          "--seed", "11"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "n,k,iterations,elapsed_nanoseconds,seed");
  std::vector<std::string> stripped;
  for (size_t i = 1; i < rows.size(); ++i) {
    uint64_t n, k, it, ns, seed;
    ASSERT_EQ(std::sscanf(rows[i].c_str(), "%lu,%lu,%lu,%lu,%lu", &n, &k, &it, &ns, &seed), 5);
    EXPECT_LE(it, n * k);
    EXPECT_EQ(seed, 10 + i);
    stripped.push_back(std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(it));
  }
  const auto again = run_cli({"bench", "--class", "skew", "--n", "500", "2000", "--k", "5", "50", "--trials", "3",
                              "--seed", "11", "--serial"});
  const auto rows2 = lines(again.out);
  ASSERT_EQ(rows2.size(), rows.size());
  for (size_t i = 1; i < rows2.size(); ++i) {
    uint64_t n, k, it, ns, seed;
    std::sscanf(rows2[i].c_str(), "%lu,%lu,%lu,%lu,%lu", &n, &k, &it, &ns, &seed);
    EXPECT_EQ(stripped[i - 1], std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(it));
  }
  EXPECT_EQ(run_cli({"bench", "--n", "10", "--k", "20"}).exit_code, 2);
  EXPECT_EQ(run_cli({"bench", "--n", "10", "20", "--k", "2"}).exit_code, 2);
}

// Random instances: fast and oracle match agree on exit codes and answers; outputs are
// byte-identical across repeated runs.
TEST(Cli, AgreesWithOracleOnRandomInstances) {
  for (uint64_t s = 0; s < 1000; ++s) {
    const auto cls = s % 2 == 0 ? oracle::PermClass::Av321 : oracle::PermClass::Skew;
    const int32_t n = 1 + static_cast<int32_t>(s % 30);
    const int32_t k = 1 + static_cast<int32_t>((s / 2 * 13) % static_cast<uint64_t>(n));
    const Permutation t = oracle::random_avoider(cls, n, s);
    const Permutation p = s % 4 < 2 ? oracle::random_subpattern(t, k, s) : oracle::random_avoider(cls, k, s + 7);
    const std::string tag = cls == oracle::PermClass::Av321 ? "av321" : "skew";
    const std::vector<std::string> args{"match", "--class", tag, format_permutation(p), format_permutation(t)};
    const auto fast = run_cli(args);
    const auto slow = run_cli({"oracle", "match", format_permutation(p), format_permutation(t)});
    ASSERT_EQ(fast.exit_code, slow.exit_code) << s;
    ASSERT_LE(fast.exit_code, 1) << fast.err;
    ASSERT_EQ(Json::parse(fast.out)["contains"], Json::parse(slow.out)["contains"]);
    if (s % 50 == 0) EXPECT_EQ(run_cli(args).out, fast.out);
  }
}
