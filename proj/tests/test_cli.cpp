#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(FATPOINTS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("fatpoints_cli_" + std::to_string(::getpid()) + "_" +
                                      ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string file(const std::string& name, const std::string& text) const {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }

  fs::path dir;
};

std::string line_with(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l.rfind(prefix, 0) == 0) return l.substr(prefix.size());
  return "<missing>";
}

int count_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  int n = 0;
  for (std::string l; std::getline(in, l);) n += l.rfind(prefix, 0) == 0;
  return n;
}

nlohmann::json read_json(const std::string& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_F(Cli, HvOneDoublePoint) {
  const auto r = run("hv " + file("one.txt", "0 0 1 2\n") + " --tmax 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "h: 1 3 3\ndh: 1 2\n");
}

TEST_F(Cli, HvRationalAndPrimeAgree) {
  const std::string pts = "1 0 0 1\n0 1 0 1\n0 0 1 1\n1/2 -3 1 2\n";
  const auto q = run("hv " + file("q.txt", pts));
  const auto p = run("hv " + file("p.txt", "# field 1000003\n" + pts));
  const auto flag = run("hv " + file("f.txt", pts) + " --prime 1000003");
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(line_with(q.out, "dh: "), "1 2 3");
  EXPECT_EQ(p.out, q.out);
  EXPECT_EQ(flag.out, q.out);
}

TEST_F(Cli, HvParseErrorNamesTheLine) {
  const std::string p = file("bad.txt", "0 0 1 2\n\n1 2 x 1\n");
  EXPECT_EQ(run("hv " + p).code, 2);
  const std::string cmd = std::string(FATPOINTS_CLI_PATH) + " hv " + p + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  char buf[512] = {0};
  const auto n = fread(buf, 1, sizeof buf - 1, f);
  pclose(f);
  EXPECT_NE(std::string(buf, n).find("line 3"), std::string::npos);
  EXPECT_EQ(run("hv " + file("m0.txt", "0 0 1 0\n")).code, 2);
  EXPECT_EQ(run("hv " + path("missing.txt")).code, 2);
}

TEST_F(Cli, HvDuplicatePointIsGeometryError) {
  EXPECT_EQ(run("hv " + file("dup.txt", "0 0 1 2\n0 0 2 1\n")).code, 3);
  EXPECT_EQ(run("hv " + file("zero.txt", "0 0 0 1\n")).code, 3);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("predict --formula nonsense").code, 2);
  EXPECT_EQ(run("predict --formula nine --case 7 --branch 9").code, 2);
  EXPECT_EQ(run("config --case nine.9").code, 2);
  EXPECT_EQ(run("verify nosuch").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, PredictExamples) {
  EXPECT_EQ(run("predict --formula nine --case 7 --branch max").out, "1 2 3 4 5 6 4 2\n");
  EXPECT_EQ(run("predict --formula nine --case 2").out, "1 2 3 4 2 2 2 2 2 1 1 1 1 1 1 1\n");
  EXPECT_EQ(run("predict --formula uniform --n 13 --m 2").out, "1 2 3 4 5 6 6 6 4 2\n");
  EXPECT_EQ(run("predict --formula uniform --n 9 --m 2 --order 2").out, "1 2 3 4 5 6 5 1\n");
  EXPECT_EQ(run("predict --formula ci --t 5").out, "1 2 3 4 5 6 6 6 5 4 2 1\n");
  EXPECT_EQ(run("predict --formula smooth-cubic --n 16 --branch a").out, "1 2 3 4 5 6 6 6 6 4 3 2\n");
  EXPECT_EQ(run("predict --formula singular-cubic --n 12 --branch d0").out, "1 2 3 4 5 6 6 5 3 1\n");
  EXPECT_EQ(run("predict --formula davis --dh '1 2 2 2 1 1' --t 4").out, "1 1 1 1 1 1\n1 1 1\n");
  EXPECT_EQ(run("predict --formula singular-support --n 10 --m 1 --tmax 5").out, "0 0 0 1 5 11\n");
  EXPECT_EQ(run("predict --formula ci --t 2").code, 2);
}

TEST_F(Cli, ConfigNineOneIsCollinear) {
  const auto r = run("config --case nine.1 --seed 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, "# field "), 1);
  std::istringstream in(r.out);
  int points = 0;
  for (std::string l; std::getline(in, l);) points += !l.empty() && l[0] != '#';
  EXPECT_EQ(points, 9);
  const auto hv = run("hv " + file("n1.txt", r.out));
  EXPECT_EQ(line_with(hv.out, "dh: "), "1 2 2 2 2 2 2 2 2 2 1 1 1 1 1 1 1 1");
}

TEST_F(Cli, ConfigSidecar) {
  const auto out = path("c.txt");
  ASSERT_EQ(run("config --case on-cubic --kind smooth --n 10 --m 2 --seed 3 --out " + out).code, 0);
  const auto j = read_json(out + ".json");
  EXPECT_EQ(j["case"], "on-cubic.smooth.n10.m2.generic");
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["multiplicity"], 2);
  EXPECT_EQ(j["expected"], "1 2 3 4 5 6 6 3");
  EXPECT_EQ(line_with(run("hv " + out).out, "dh: "), "1 2 3 4 5 6 6 3");
  ASSERT_EQ(run("config --case ci --t 4 --seed 3 --out " + out + " --sidecar " + path("side.json")).code, 0);
  EXPECT_EQ(read_json(path("side.json"))["expected"], "1 2 3 4 5 6 6 5 3 1");
}

TEST_F(Cli, ConfigRoundTrip) {
  const std::vector<std::string> cases = {
      "--case nine.5.5+4-shared", "--case nine.7.two-lines", "--case nine.8.five-lines",
      "--case split --sizes 5,3 --free 1", "--case ci --t 3", "--case on-cubic --kind nodal --n 12 --m 2 --sum order:2",
      "--case on-cubic --kind three-lines --n 9 --m 3 --sum identity", "--case on-cubic --kind nodal --n 12 --m 2 --singular"};
  int i = 0;
  for (const auto& c : cases) {
    const auto out = path("rt" + std::to_string(i++) + ".txt");
    ASSERT_EQ(run("config " + c + " --seed 11 --out " + out).code, 0) << c;
    const auto j = read_json(out + ".json");
    ASSERT_TRUE(j["expected"].is_string()) << c;
    EXPECT_EQ(line_with(run("hv " + out).out, "dh: "), j["expected"].get<std::string>()) << c;
  }
}

TEST_F(Cli, ConfigUnavailableTorsion) {
  EXPECT_EQ(run("config --case on-cubic --kind cuspidal --n 9 --m 2 --sum order:2").code, 1);
}

TEST_F(Cli, ConfigDeterministic) {
  const auto a = run("config --case nine.8.generic --seed 7");
  const auto b = run("config --case nine.8.generic --seed 7");
  const auto c = run("config --case nine.8.generic --seed 8");
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  const auto env = run("config --case nine.8.generic --seed 7");
  const std::string with_env = "FATPOINTS_SEED=7 " + std::string(FATPOINTS_CLI_PATH) + " config --case nine.8.generic";
  FILE* p = popen(with_env.c_str(), "r");
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  pclose(p);
  EXPECT_EQ(out, env.out);
}

TEST_F(Cli, VerifyTable3) {
  const auto r = run("verify table3 --seed 42");
  EXPECT_EQ(r.code, 0);
  EXPECT_GE(count_lines(r.out, "PASS "), 15);
  EXPECT_EQ(count_lines(r.out, "FAIL "), 0);
  EXPECT_EQ(r.out, run("verify table3 --seed 42 --threads 1").out);
}

TEST_F(Cli, VerifyCiAndInvariants) {
  const auto ci = run("verify ci --tmax 7");
  EXPECT_EQ(ci.code, 0);
  for (int t = 3; t <= 7; ++t) EXPECT_NE(ci.out.find("PASS ci.t0" + std::to_string(t) + " "), std::string::npos) << t;
  const auto inv = run("verify invariants");
  EXPECT_EQ(inv.code, 0);
  for (const char* k : {"PASS invariants.degree-sum.", "PASS invariants.regularity.", "PASS invariants.davis."}) EXPECT_GT(count_lines(inv.out, k), 0) << k;
}

TEST_F(Cli, VerifyJson) {
  const auto r = run("verify ci --tmax 4 --json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_FALSE(j.empty());
  for (const auto& c : j) {
    for (const char* key : {"case", "expected", "computed", "status"}) EXPECT_TRUE(c.contains(key)) << key;
    EXPECT_EQ(c["status"], "PASS");
  }
}
