#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "qhopf/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(QHOPF_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

qhopf::Json json_of(const Result& r) { return qhopf::Json::parse(r.out); }

const std::string data_dir = QHOPF_DATA_DIR;

}  // namespace

TEST(Cli, VerifyExamples) {
  for (const char* ex : {"sweedler", "group:Z2", "dpr:Z2:1"}) {
    const auto r = run(std::string("verify --example ") + ex);
    EXPECT_EQ(r.code, 0) << ex;
    EXPECT_TRUE(json_of(r)["pass"].get<bool>()) << ex;
  }
}

TEST(Cli, BrokenPentagonFailsWithWitness) {
  const auto r = run("verify " + data_dir + "/broken_pentagon.json");
  EXPECT_EQ(r.code, 1);
  const auto j = json_of(r);
  EXPECT_FALSE(j["pass"].get<bool>());
  bool found = false;
  for (const auto& row : j["stages"]["validation"]["rows"])
    if (row["name"] == "q3_pentagon") {
      found = true;
      EXPECT_FALSE(row["pass"].get<bool>());
      EXPECT_FALSE(row["witness"].get<std::string>().empty());
    }
  EXPECT_TRUE(found);
}

TEST(Cli, QuantumDimensions) {
  for (const auto& [ex, value] : std::vector<std::pair<std::string, std::string>>{
           {"dpr:Z2:1", "2"}, {"sweedler", "0"}, {"group:S3", "6"}}) {
    const auto r = run("qdim --example " + ex);
    EXPECT_EQ(r.code, 0) << ex;
    const auto q = json_of(r)["stages"]["qdim"];
    for (const char* k : {"qdim_closed_form", "qdim_schrodinger", "qdim_double_regular"}) EXPECT_EQ(q[k], value) << ex << " " << k;
    EXPECT_TRUE(q["equal"].get<bool>());
  }
}

TEST(Cli, Integrals) {
  auto r = run("integrals --example group:Z2 --chi-trials 20");
  EXPECT_EQ(r.code, 0);
  auto j = json_of(r)["stages"];
  EXPECT_EQ(j["trace"]["matches"], 20);
  EXPECT_EQ(j["rank"]["rank_scalar"], "2");
  EXPECT_TRUE(j["conjecture_probe"].get<bool>());

  r = run("integrals --example sweedler");
  EXPECT_EQ(r.code, 0);
  j = json_of(r)["stages"];
  EXPECT_EQ(j["rank"]["rank_scalar"], "0");
  EXPECT_EQ(j["rank"]["epsilon_r"], "0");
  EXPECT_FALSE(j["integrals"]["mu_is_counit"].get<bool>());

  r = run("integrals --example dual-omega:Z2:1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["stages"]["rank"]["rank_scalar"], "2");
}

TEST(Cli, ReportsAreDeterministic) {
  const auto a = run("integrals --example dual-omega:Z3:1 --seed 5");
  const auto b = run("integrals --example dual-omega:Z3:1 --seed 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, StageSelectionAndOutFile) {
  const std::string path = testing::TempDir() + "qhopf_report.json";
  const auto r = run("integrals --example group:Z3 --stage trace --out " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = qhopf::Json::parse(f);
  EXPECT_TRUE(j["stages"].contains("trace"));
  EXPECT_FALSE(j["stages"].contains("rank"));
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("verify --example nonsense").code, 2);
  EXPECT_EQ(run("verify /nonexistent.json").code, 2);
  EXPECT_EQ(run("qdim").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("integrals --example group:Z2 --chi-trials -1").code, 2);
}
