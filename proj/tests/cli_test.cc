#include "farsinorm/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace farsinorm {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("farsinorm_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  static std::string read(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, NormalizeStdin) {
  const CliResult r = run({"normalize"}, "ساعت 8:00\nقیمت 25$\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ساعت هشت\nقیمت بیست و پنج دلار\n");
}

TEST_F(CliTest, UrlWords) {
  const CliResult latin = run({"normalize"}, "http://a.ir\n");
  const CliResult persian = run({"normalize", "--url-words", "persian"}, "http://a.ir\n");
  EXPECT_EQ(latin.code, 0);
  EXPECT_EQ(persian.code, 0);
  EXPECT_NE(latin.out, persian.out);
  EXPECT_EQ(latin.out.find("http"), 0u);
  EXPECT_EQ(run({"normalize", "--url-words", "klingon"}, "x\n").code, kExitUsage);
  const std::string cfg = write("c.conf", "url-words=persian\n");
  EXPECT_EQ(run({"--config", cfg, "normalize"}, "http://a.ir\n").out, persian.out);
}

TEST_F(CliTest, GeneralMode) {
  const CliResult r = run({"normalize", "--mode", "general"}, "عدد ⑥ ٪😀\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "عدد ۶ %\n");
}

TEST_F(CliTest, SeededRunsAreByteIdentical) {
  const std::string in = write("in.txt", "1400-07-25\n09397796915\n11:35\n1400-07-25\n");
  const std::string a = write("a.txt", ""), b = write("b.txt", "");
  EXPECT_EQ(run({"normalize", "--mode", "speech", "--seed", "7", in, "--out", a}).code, 0);
  EXPECT_EQ(run({"normalize", "--mode", "speech", "--seed", "7", in, "--out", b}).code, 0);
  EXPECT_FALSE(read(a).empty());
  EXPECT_EQ(read(a), read(b));
}

TEST_F(CliTest, TemplateIndexAndDisable) {
  EXPECT_EQ(run({"normalize", "--template-index", "1"}, "11:35\n").out,
            "یازده و سی و پنج\n");
  EXPECT_EQ(run({"normalize", "--disable", "time", "--disable", "plain_number"}, "11:35 و 5\n")
                .out,
            "۱۱:۳۵ و ۵\n");
}

TEST_F(CliTest, Enumerate) {
  const CliResult r = run({"normalize", "--enumerate"}, "11:35\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("یازده و سی و پنج\n"), std::string::npos);
  EXPECT_NE(r.out.find("یازده و سی و پنج دقیقه\n"), std::string::npos);
}

TEST_F(CliTest, Split) {
  const CliResult r = run({"split"}, "رفتم. آمدم.\nعدد 3.14 مهم است.\n");
  EXPECT_EQ(r.out, "رفتم.\nآمدم.\nعدد 3.14 مهم است.\n");
}

TEST_F(CliTest, Scan) {
  const CliResult r = run({"scan"}, "ساعت 11:35\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5\t10\tTIME\t۱۱:۳۵\n");
}

TEST_F(CliTest, EvalSplit) {
  const CliResult r = run({"eval-split", FARSINORM_FIXTURE_DIR "/segmentation_gold.txt"});
  EXPECT_EQ(r.code, 0);
  ASSERT_EQ(r.out.size(), 7u) << r.out;  // "0.xxxx\n"
  const double acc = std::stod(r.out);
  EXPECT_GE(acc, 0.0);
  EXPECT_LE(acc, 1.0);
}

TEST_F(CliTest, ConfigFileIsOverriddenByFlags) {
  const std::string cfg = write("c.cfg", "# defaults\nmode = general\ntemplate-index=1\n");
  EXPECT_EQ(run({"--config", cfg, "normalize"}, "11:35\n").out, "۱۱:۳۵\n");
  EXPECT_EQ(run({"--config", cfg, "normalize", "--mode", "speech"}, "11:35\n").out,
            "یازده و سی و پنج\n");
  const std::string bad = write("bad.cfg", "colour=blue\n");
  EXPECT_EQ(run({"--config", bad, "normalize"}, "x\n").code, kExitUsage);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"normalize", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"normalize", "--mode", "loud"}).code, kExitUsage);
  EXPECT_EQ(run({"normalize", "--disable", "nope"}, "x\n").code, kExitUsage);
  EXPECT_EQ(run({"normalize", (dir_ / "missing.txt").string()}).code, kExitIo);
  EXPECT_EQ(run({"eval-split", (dir_ / "missing.txt").string()}).code, kExitIo);
  EXPECT_EQ(run({"--data-dir", (dir_ / "nodata").string(), "normalize"}, "x\n").code, kExitIo);
  EXPECT_EQ(run({"--config", (dir_ / "none.cfg").string(), "normalize"}, "x\n").code, kExitIo);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, DataDirOverlaysTables) {
  fs::create_directories(dir_ / "tables");
  write("tables/symbols.tsv", "%\tپرسنت\n");
  EXPECT_EQ(run({"--data-dir", dir_.string(), "normalize"}, "۵%\n").out, "پنج پرسنت\n");
}

TEST_F(CliTest, BinaryRuns) {
  const std::string in = write("in.txt", "ساعت 11:35\n");
  const std::string out = (dir_ / "out.txt").string();
  const std::string cmd = std::string(FARSINORM_TOOL) + " scan " + in + " > " + out;
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(read(out), "5\t10\tTIME\t۱۱:۳۵\n");
}

}  // namespace
}  // namespace farsinorm
