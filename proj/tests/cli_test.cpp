#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(PIERCE_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pierce_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenerateChain) {
  const CliRun r = run("generate --family chain --n 3 --seed 1 --out " + path("c.json"));
  EXPECT_EQ(r.code, 0);
  const std::string text = slurp(path("c.json"));
  EXPECT_EQ(text.rfind(R"({"problem":"coverage","domain":[0,5],"intervals":[)", 0), 0u);
  EXPECT_EQ(text.back(), '\n');
}

TEST_F(CliTest, GenerateStaircaseSix) {
  const CliRun r = run("generate --family staircase --n 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            R"({"problem":"piercing","xdomain":[0,8],"ydomain":[0,8],"crosses":[)"
            R"({"h":[2,8],"v":[2,8]},{"h":[3,8],"v":[0,1]},{"h":[0,1],"v":[4,8]},)"
            R"({"h":[6,8],"v":[0,3]},{"h":[0,4],"v":[0,5]},{"h":[0,5],"v":[6,8]}]})"
            "\n");
}

TEST_F(CliTest, GenerateErrors) {
  EXPECT_EQ(run("generate --family staircase --n 2").code, 2);
  EXPECT_EQ(run("generate --family spiral --n 5").code, 2);
  EXPECT_EQ(run("generate --family chain").code, 2);
  EXPECT_EQ(run("generate --family chain --n 4 --out /nonexistent-dir/x.json").code, 3);
}

TEST_F(CliTest, GenerateIsDeterministic) {
  run("generate --family random-piercing --n 30 --seed 5 --out " + path("a.json"));
  run("generate --family random-piercing --n 30 --seed 5 --out " + path("b.json"));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(CliTest, SolveExitCodes) {
  run("generate --family chain --n 3 --seed 1 --out " + path("c.json"));
  CliRun r = run("solve --in " + path("c.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind(R"({"covered":true,)", 0), 0u);

  run("generate --family staircase --n 4 --out " + path("s.json"));
  r = run("solve --in " + path("s.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind(R"({"pierceable":false,)", 0), 0u);

  write("t.json", R"({"problem":"coverage","domain":[0,5],"interv)");
  EXPECT_EQ(run("solve --in " + path("t.json")).code, 2);
  EXPECT_EQ(run("solve --in " + path("missing.json")).code, 3);

  write("bad.json", R"({"problem":"coverage","domain":[0,5],"intervals":[[0,6]]})");
  EXPECT_EQ(run("solve --in " + path("bad.json")).code, 2);
  write("pt.json", R"({"problem":"coverage","domain":[0,5],"intervals":[[0,5],[2,2]]})");
  EXPECT_EQ(run("solve --in " + path("pt.json")).code, 0);
  EXPECT_EQ(run("solve --strict --in " + path("pt.json")).code, 2);
}

TEST_F(CliTest, SolveDoesNotTouchInput) {
  run("generate --family disjoint --n 5 --out " + path("d.json"));
  const std::string before = slurp(path("d.json"));
  const auto mtime = fs::last_write_time(path("d.json"));
  run("solve --in " + path("d.json"));
  run("verify --in " + path("d.json"));
  EXPECT_EQ(slurp(path("d.json")), before);
  EXPECT_EQ(fs::last_write_time(path("d.json")), mtime);
}

TEST_F(CliTest, Verify) {
  run("generate --family chain --n 50 --seed 2 --out " + path("c.json"));
  CliRun r = run("verify --in " + path("c.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("agree":true)"), std::string::npos);

  run("generate --family staircase --n 10 --out " + path("s.json"));
  r = run("verify --minimality --in " + path("s.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("full_family_pierceable":false)"), std::string::npos);

  EXPECT_EQ(run("verify --inject-fault --in " + path("c.json")).code, 4);
  EXPECT_EQ(run("verify --inject-fault --in " + path("s.json")).code, 4);
}

TEST_F(CliTest, BenchRowsAndDeterminism) {
  CliRun r = run("bench --family chain --n 4..64 --trials 5 --out " + path("a.csv"));
  EXPECT_EQ(r.code, 0);
  const std::string csv = slurp(path("a.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 5 * 61);

  run("bench --family chain --n 4..64 --trials 5 --out " + path("b.csv"));
  EXPECT_EQ(slurp(path("b.csv")), csv);

  r = run("bench --family staircase --n 4..12");
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_NE(line.find(",not-pierceable,"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 9);

  EXPECT_EQ(run("bench --family spiral --n 4").code, 2);
  EXPECT_EQ(run("bench --family chain --n x..4").code, 2);
  EXPECT_EQ(run("bench --family chain --n 4 --out /nonexistent-dir/a.csv").code, 3);
}

TEST_F(CliTest, Bound) {
  const CliRun r = run("bound --n 8");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("lb_union":5.918)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(R"("lb_union_ceil":6)"), std::string::npos);
  EXPECT_EQ(run("bound").code, 2);
}
