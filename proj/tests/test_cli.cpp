#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "fdcalc/commands.hpp"

using namespace fdcalc;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

/// Runs the CLI through the shell with stderr discarded.
CliRun cli(const std::string& args) {
  const std::string cmd = std::string("'") + FDCALC_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("fdcalc-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path_ / name) << text; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, DifferenceRadicalOfRootsLiteral) {
  CliRun r = cli("rad-delta 'roots(1; 0:2, 1:1, 2:1)'");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "z^2\n");
}

TEST(Cli, ArityAndParseErrorsAreUsageErrors) {
  EXPECT_EQ(cli("mason 'ff(z,1)' 'ff(z,1)'").exit_code, kExitUsage);
  EXPECT_EQ(cli("delta 'z + * 3'").exit_code, kExitUsage);
  EXPECT_EQ(cli("no-such-command z").exit_code, kExitUsage);
  EXPECT_EQ(cli("").exit_code, kExitUsage);
  EXPECT_EQ(cli("height z").exit_code, kExitUsage);  // --at missing
}

TEST(Cli, LeadingMinusNeedsSeparator) {
  CliRun r = cli("delta -- '-z^2'");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "-2*z - 1\n");
}

TEST(Cli, ComputationFailuresExitOne) {
  EXPECT_EQ(cli("factor-at 'z^2' --at 1").exit_code, kExitComputation);
  EXPECT_EQ(cli("fermat --n 3 -- 'z^2' '-(1/2)*i*(sqrt(2)*z^2 + 2*z - sqrt(2))' "
                "'-(1/2)*(sqrt(2)*z^2 - 2*z - sqrt(2))'")
                .exit_code,
            kExitComputation);
  EXPECT_EQ(cli("fermat --n 2 -- 'z^2' '-(1/2)*i*(sqrt(2)*z^2 + 2*z - sqrt(2))' "
                "'-(1/2)*(sqrt(2)*z^2 - 2*z - sqrt(2))'")
                .exit_code,
            kExitOk);
}

TEST(Cli, JsonOutputIsByteStable) {
  const std::string args = "--json mason-ext -- 'ff(z+2/5,5)' '-ff(z+3/5,5)' 'ff(z,4)' "
                           "'24/50000*(1000*z^2-3000*z+1776)'";
  CliRun a = cli(args), b = cli(args);
  EXPECT_EQ(a.exit_code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  json j = json::parse(a.out);
  EXPECT_EQ(j["command"], "mason-ext");
  EXPECT_EQ(j["result"]["slack"], 0);
  EXPECT_EQ(j["result"]["sharp"], true);
}

TEST(Cli, BundledFixturesPass) {
  CliRun r = cli("verify-paper");
  EXPECT_EQ(r.exit_code, kExitOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, FixtureMismatchExitsThree) {
  TempDir dir;
  dir.write("wrong.json", R"json({"name": "wrong", "source": "derived:deliberately wrong",
    "command": "rad-delta", "inputs": ["roots(1; 0:2, 1:1, 2:1)"],
    "expected": {"result": {"$poly": "z^3"}}})json");
  CliRun r = cli("verify-paper --fixtures '" + dir.path().string() + "'");
  EXPECT_EQ(r.exit_code, kExitMismatch);
  EXPECT_NE(r.out.find("FAIL  wrong"), std::string::npos);
}

TEST(Cli, FixtureWithoutProvenanceIsRejected) {
  TempDir dir;
  dir.write("bad.json", R"json({"name": "bad", "source": "somewhere", "command": "delta", "inputs": ["z"]})json");
  EXPECT_NE(cli("verify-paper --fixtures '" + dir.path().string() + "'").exit_code, kExitOk);
}

TEST(Commands, DeltaJsonShape) {
  CommandOptions opt;
  opt.k = 2;
  CommandResult r = run_command("delta", {"z^3"}, opt);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.output["command"], "delta");
  EXPECT_EQ(r.output["result"]["coeffs"], json::parse(R"(["6/1", "6/1"])"));
}

TEST(Commands, NumericBackendHeight) {
  CommandOptions opt;
  opt.backend = "numeric";
  opt.precision = 128;
  opt.at = "0";
  CommandResult h = run_command("height", {"z^2*(z-1)*(z-2)"}, opt);
  EXPECT_EQ(h.exit_code, kExitOk) << h.text;
  EXPECT_EQ(h.output["result"]["height"], 3);
}

TEST(Commands, MatcherDetectsMismatch) {
  std::string why;
  json actual = {{"coeffs", {"0", "0", "1/1"}}};
  EXPECT_TRUE(detail::match(json{{"$poly", "z^2"}}, actual, "$", why));
  EXPECT_FALSE(detail::match(json{{"$poly", "z^2 + 1"}}, actual, "$", why));
  EXPECT_NE(why.find("expected polynomial"), std::string::npos);
  EXPECT_TRUE(detail::match(json{{"$lt", 1e-25}}, json("1e-70"), "$", why));
  EXPECT_FALSE(detail::match(json{{"$lt", 1e-25}}, json("1e-20"), "$", why));
  EXPECT_TRUE(detail::match(json{{"$scalars", {"1", "sqrt(2)"}}}, json{"1/1*sqrt(2)", "1/1"}, "$", why));
  EXPECT_FALSE(detail::match(json::array({1, 2}), json::array({1, 2, 3}), "$", why));
  EXPECT_FALSE(detail::match(json{{"a", 1}}, json{{"b", 1}}, "$", why));
}
