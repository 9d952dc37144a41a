#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cauchykit/document.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cauchykit-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  // stderr is folded into the captured output.
  Result run(const std::string& args) {
    std::string cmd = std::string(CAUCHYKIT_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  fs::path dir_;
};

const char* kData = R"({"field":"Q","kind":"cauchy_data","x":["0","1"],"x_tilde":["2","3"]})";

}  // namespace

TEST_F(Cli, Identities) {
  auto r = run("identities " + file("d.json", kData));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"all_passed\": true"), std::string::npos);
}

TEST_F(Cli, RecognizeIdentityIsNotCauchy) {
  auto r = run("recognize " + file("i.json", R"({"field":"Q","kind":"matrix","n_rows":2,"n_cols":2,"entries":["1","0","0","1"]})"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("zero_entry"), std::string::npos);
}

TEST_F(Cli, EquivShiftedPair) {
  std::string p = (dir_ / "p.json").string();
  std::string q = (dir_ / "q.json").string();
  ASSERT_EQ(run("pair-from-data " + file("d.json", kData) + " --out " + p).code, 0);
  ASSERT_EQ(run("pair-from-data --out " + q + " " +
                file("s.json", R"({"field":"Q","kind":"cauchy_data","x":["5","6"],"x_tilde":["7","8"]})"))
                .code,
            0);
  EXPECT_EQ(run("verify-pair " + p).code, 0);
  auto r = run("equiv " + p + " " + q);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"zeta\": \"-5\""), std::string::npos);
  EXPECT_NE(r.out.find("second pair + zeta*I"), std::string::npos);

  auto c = run("classify " + p + " " + q);
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("\"n_classes\": 1"), std::string::npos);

  auto other = file("o.json", R"({"field":"Q","kind":"cauchy_data","x":["0","1"],"x_tilde":["2","4"]})");
  std::string o = (dir_ / "op.json").string();
  ASSERT_EQ(run("pair-from-data " + other + " -o " + o).code, 0);
  EXPECT_EQ(run("equiv " + p + " " + o).code, 1);
  EXPECT_EQ(run("equiv " + file("d2.json", kData) + " " + other).code, 1);
}

TEST_F(Cli, FalseVerdicts) {
  auto bad = file("bad.json", R"({"field":"Q","kind":"pair","X":{"n_rows":1,"n_cols":1,"entries":["1"]},
    "X_tilde":{"n_rows":1,"n_cols":1,"entries":["1"]}})");
  EXPECT_EQ(run("verify-pair " + bad).code, 1);
  EXPECT_EQ(run("eigenvalue-data " + bad).code, 1);
}

TEST_F(Cli, StdinAndWorkedExample) {
  std::string d = file("d.json", kData);
  auto inv = run("invert < " + d);
  EXPECT_EQ(inv.code, 0);
  auto m = std::get<cauchykit::DenseMatrix>(cauchykit::parse_document(inv.out));
  EXPECT_EQ(m.entries()[2].to_string(), "-12");
  auto t = run("transition " + d + " --from eps --to eps-tilde");
  EXPECT_EQ(t.code, 0);
  auto tm = std::get<cauchykit::DenseMatrix>(cauchykit::parse_document(t.out));
  EXPECT_EQ(tm.entries()[0].to_string(), "-1");
  auto g = run("gram " + d + " --left eps --right eps --rho 2");
  auto gm = std::get<cauchykit::DenseMatrix>(cauchykit::parse_document(g.out));
  EXPECT_EQ(gm.entries()[0].to_string(), "-12");
  auto rhs = file("b.json", R"({"field":"Q","kind":"matrix","n_rows":2,"n_cols":1,"entries":["1","1"]})");
  auto y = run("solve " + d + " --rhs " + rhs);
  EXPECT_EQ(y.code, 0);
  EXPECT_EQ(std::get<cauchykit::DenseMatrix>(cauchykit::parse_document(y.out)).entries()[1].to_string(), "-6");
}

TEST_F(Cli, OutputsReparse) {
  std::string d = file("d.json", kData);
  std::string m = (dir_ / "m.json").string();
  for (const std::string& cmd : std::vector<std::string>{"build " + d, "invert " + d, "pair-from-data " + d, "gen -n 4 --seed 9",
                                 "gen -n 3 --field 'GF(101)'", "transition " + d + " --from eps-star --to eps-tilde-star",
                                 "gram " + d + " --left eps --right eps-tilde-star"}) {
    auto r = run(cmd);
    ASSERT_EQ(r.code, 0) << cmd << "\n" << r.out;
    auto doc = cauchykit::parse_document(r.out);
    EXPECT_EQ(cauchykit::to_json(doc), r.out) << cmd;
  }
  ASSERT_EQ(run("build " + d + " -o " + m).code, 0);
  auto back = run("recognize " + m);
  EXPECT_EQ(back.code, 0);
}

TEST_F(Cli, GenDeterminism) {
  auto a = run("gen -n 5 --seed 3");
  auto b = run("gen -n 5 --seed 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto small = run("gen -n 4 --field gf:7");
  EXPECT_EQ(small.code, 2);
  EXPECT_NE(small.out.find("GF(7)"), std::string::npos);
}

TEST_F(Cli, InputErrors) {
  auto r = run("invert " + file("m.json", R"({"field":"Q","kind":"cauchy_data","x":["0","1/x"],"x_tilde":["2","3"]})"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("1/x"), std::string::npos);
  r = run("invert " + file("j.json", "{\"field\": \"Q\", \"kind\": "));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run("invert " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(run("invert --bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("recognize " + file("d.json", kData)).code, 2);
  EXPECT_EQ(run("bench --sizes 4 --trials 0").code, 2);
  EXPECT_EQ(run("bench --sizes 1").code, 2);
}

TEST_F(Cli, Bench) {
  auto r = run("bench --sizes 2,8 --trials 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n,structured_us,oracle_us,match\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_EQ(r.out.find("false"), std::string::npos);
}
