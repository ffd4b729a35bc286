#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "testutil.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

CliResult run_shell(const std::string& cmd) {
  CliResult res;
  FILE* pipe = ::popen((cmd + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    res.out.append(buf, got);
  const int status = ::pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) res.code = WEXITSTATUS(status);
  return res;
}

CliResult run_cli(const std::string& args) {
  return run_shell(std::string(PERIODICA_CLI_BIN) + " " + args);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: periods report") {
  const auto res = run_cli("periods abbaabba");
  CHECK(res.code == 0);
  CHECK(contains(res.out, "periods: {0,4,7}"));
  CHECK(contains(res.out, "basic period: 4"));
  CHECK(contains(res.out, "autocorrelation: 10001001"));
  CHECK(contains(res.out, "irreducible: {0,4,7}"));

  const auto single = run_cli("periods a");
  CHECK(single.code == 0);
  CHECK(contains(single.out, "periods: {0}"));
  CHECK(contains(single.out, "basic period: none"));
  CHECK(contains(single.out, "autocorrelation: 1"));
}

TEST_CASE("cli: periods json") {
  const auto res = run_cli("periods abbaabba --format json");
  REQUIRE(res.code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["n"] == 8);
  CHECK(doc["periods"] == nlohmann::json::array({0, 4, 7}));
  CHECK(doc["basic_period"] == 4);
  CHECK(doc["autocorrelation"] == "10001001");
  CHECK(doc["irreducible"] == nlohmann::json::array({0, 4, 7}));
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run_cli("periods \"\"").code == 2);
  CHECK(run_cli("periods").code == 2);
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("correlate ab abc").code == 2);
  CHECK(run_cli("closure --set 1,2").code == 2);   // missing --n
  CHECK(run_cli("closure --n x --set 1").code == 2);
  CHECK(run_cli("bounds --max-n 1").code == 2);
  CHECK(run_cli("periods ab --format csv").code == 2);
  CHECK(run_cli("periods ab --format yaml").code == 2);
}

TEST_CASE("cli: autocorr prints the bare vector") {
  const auto res = run_cli("autocorr abbaabba");
  CHECK(res.code == 0);
  CHECK(res.out == "10001001\n");
}

TEST_CASE("cli: correlate reports the decomposition") {
  const auto res = run_cli("correlate aabbaa baabaa");
  CHECK(res.code == 0);
  CHECK(contains(res.out, "correlation: 000100"));
  CHECK(contains(res.out, "j: 3"));
  CHECK(contains(res.out, "s: 100"));
}

TEST_CASE("cli: closure and irreducible") {
  const auto closed = run_cli("closure --n 12 --set 3,5");
  CHECK(closed.code == 0);
  CHECK(contains(closed.out, "{3,5,7,9,11}"));
  CHECK(run_cli("closure --n 12 --set 0,40").code == 2);

  const auto irr = run_cli("irreducible --n 8 --set 0,4,7");
  CHECK(irr.code == 0);
  CHECK(contains(irr.out, "irreducible: {0,4,7}"));
  CHECK(contains(irr.out, "q-sequence: (0,8) (4,4) (7,1)"));
  CHECK(contains(irr.out, "cases: 1 1"));

  // Forward-closed but unrealizable input still gets certificates.
  const auto odd = run_cli("irreducible --n 6 --set 0,2,3,4,5");
  CHECK(odd.code == 0);
  CHECK(contains(odd.out, "irreducible: {0,2,3}"));

  CHECK(run_cli("irreducible --n 6 --set 0,3,4 --strict").code == 2);
  CHECK(run_cli("irreducible --n 8 --set 0,4,7 --strict").code == 0);
}

TEST_CASE("cli: enumerate writes the cache and reports kappa") {
  const auto dir = testutil::scratch_dir("cli_enum");
  const std::string flag = " --gamma-dir " + dir.string();

  const auto res = run_cli("enumerate --n 3" + flag);
  CHECK(res.code == 0);
  CHECK(contains(res.out, "n=3 kappa=3"));
  CHECK(slurp(dir / "gamma_3.txt") == "# n=3 kappa=3\n100\n101\n111\n");

  const auto listing = run_cli("enumerate --n 3 --out -" + flag);
  CHECK(listing.code == 0);
  CHECK(listing.out == "100\n101\n111\n");

  CHECK(run_cli("enumerate --n 40" + flag).code == 3);
  CHECK(run_cli("enumerate --n 25" + flag).code == 3);

  {
    std::ofstream bad(dir / "gamma_4.txt");
    bad << "# n=4 kappa=9\n1000\n";
  }
  const auto corrupt = run_cli("enumerate --n 4" + flag);
  CHECK(corrupt.code == 3);
  CHECK(contains(corrupt.out, "gamma_4.txt"));
}

TEST_CASE("cli: gamma dir comes from flag, then environment") {
  const auto env_dir = testutil::scratch_dir("cli_env");
  const auto flag_dir = testutil::scratch_dir("cli_flag");
  const std::string env_prefix =
      "PERIODICA_GAMMA_DIR=" + env_dir.string() + " ";
  const std::string bin(PERIODICA_CLI_BIN);

  const auto via_env = run_shell(env_prefix + bin + " enumerate --n 2");
  CHECK(via_env.code == 0);
  CHECK(std::filesystem::exists(env_dir / "gamma_2.txt"));

  // An explicit flag beats the environment.
  const auto both = run_shell(env_prefix + bin + " enumerate --n 3" +
                              " --gamma-dir " + flag_dir.string());
  CHECK(both.code == 0);
  CHECK(std::filesystem::exists(flag_dir / "gamma_3.txt"));
  CHECK(!std::filesystem::exists(env_dir / "gamma_3.txt"));
}

TEST_CASE("cli: witness and validate") {
  const auto dir = testutil::scratch_dir("cli_validate");
  CHECK(run_cli("witness 101").out == "aba\n");
  CHECK(run_cli("witness 110").out == "none\n");
  CHECK(run_cli("witness 1x1").code == 2);

  const auto valid =
      run_cli("validate 10001001 --gamma-dir " + dir.string());
  CHECK(valid.code == 0);
  CHECK(valid.out == "valid\n");
  const auto invalid = run_cli("validate 110 --gamma-dir " + dir.string());
  CHECK(invalid.code == 0);
  CHECK(invalid.out == "invalid\n");
  CHECK(run_cli("validate " + std::string(30, '1') + " --gamma-dir " +
                dir.string())
            .code == 3);  // above the default ceiling
}

TEST_CASE("cli: bounds table, json and svg") {
  const auto dir = testutil::scratch_dir("cli_bounds");
  const std::string flag = " --gamma-dir " + dir.string();
  for (int n : {2, 3, 4, 5, 6, 7, 8})
    REQUIRE(run_cli("enumerate --n " + std::to_string(n) + flag).code == 0);

  const auto csv = run_cli("bounds --max-n 16" + flag);
  CHECK(csv.code == 0);
  CHECK(contains(csv.out,
                 "n,kappa,normalized,new_upper,go_upper,go_lower,rr_lower,"
                 "counting_bound,counting_bound_norm,delta_upper"));
  CHECK(contains(csv.out, "\n8,13,"));
  CHECK(contains(csv.out, "far from convergence at n = 16"));

  const auto js = run_cli("bounds --max-n 10 --format json" + flag);
  REQUIRE(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 9);
  CHECK(doc[0]["n"] == 2);
  CHECK(doc[0]["kappa"] == 2);
  CHECK(doc[0]["rr_lower"].is_null());
  CHECK(doc[2]["n"] == 4);
  CHECK(!doc[2]["rr_lower"].is_null());
  CHECK(doc[8]["kappa"].is_null());  // n = 10 was not cached

  const auto svg_path = dir / "chart.svg";
  const auto svg = run_cli("bounds --max-n 16 --svg " + svg_path.string() +
                           " --out /dev/null" + flag);
  CHECK(svg.code == 0);
  const std::string chart = slurp(svg_path);
  CHECK(contains(chart, "<svg"));
  CHECK(contains(chart, "</svg>"));
  CHECK(contains(chart, "new_upper"));
}

TEST_CASE("cli: verify runs the suites") {
  const auto dir = testutil::scratch_dir("cli_verify");
  const auto res = run_cli("verify --max-n 5 --gamma-dir " + dir.string());
  CHECK(res.code == 0);
  CHECK(contains(res.out, "[PASS] closure-round-trip"));
  CHECK(contains(res.out, "[PASS] correlation-structure"));
  CHECK(contains(res.out, "all suites passed"));

  {
    std::ofstream bad(dir / "gamma_3.txt");
    bad << "junk\n";
  }
  const auto broken = run_cli("verify --max-n 5 --gamma-dir " + dir.string());
  CHECK(broken.code == 3);
  CHECK(contains(broken.out, "gamma_3.txt"));
}
