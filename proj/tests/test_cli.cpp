// Spawns the CLI binary (path in argv[1]) and checks its contract.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string g_cli;

struct RunResult {
  int exitCode;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (fgets(buf.data(), buf.size(), p)) out += buf.data();
  const int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("classify regimes") {
  CHECK(run("classify 1 0").out.find("OneCut") == 0);
  CHECK(run("classify -3 0").out.find("TwoCut") == 0);
  CHECK(run("classify -1 2").out.find("ThreeCut") == 0);
  CHECK(run("classify -2 0").out.find("MultiCritical(-2)") == 0);
  CHECK(run("classify 1 0").exitCode == 0);
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run("trace --sigma 1 0 --regime bogus").exitCode == 64);
  CHECK(run("phase-boundary --curve nope").exitCode == 64);
}

TEST_CASE("trace emits csv and svg") {
  auto csv = run("trace --sigma 1 0 --regime 1 --out -");
  CHECK(csv.exitCode == 0);
  CHECK(csv.out.find("\"censusAngles\"") != std::string::npos);
  auto res = run("trace --sigma 1 0 --regime 1 --out /tmp/quartic_trace_test.svg");
  CHECK(res.exitCode == 0);
  FILE* f = fopen("/tmp/quartic_trace_test.svg", "r");
  REQUIRE(f != nullptr);
  char head[6] = {0};
  REQUIRE(fread(head, 1, 4, f) == 4);
  fclose(f);
  CHECK(std::string(head) == "<svg");
  std::remove("/tmp/quartic_trace_test.svg");
}

TEST_CASE("phase boundary polylines") {
  auto res = run("phase-boundary --curve g1");
  CHECK(res.exitCode == 0);
  CHECK(res.out.find("\"curve\": \"gamma1\"") != std::string::npos);
  auto csv = run("phase-boundary --curve g5 --out /tmp/quartic_g5.csv");
  CHECK(csv.exitCode == 0);
  FILE* f = fopen("/tmp/quartic_g5.csv", "r");
  REQUIRE(f != nullptr);
  char line[64] = {0};
  REQUIRE(fgets(line, sizeof line, f) != nullptr);
  fclose(f);
  CHECK(std::string(line) == "re,im\n");
  std::remove("/tmp/quartic_g5.csv");
}

TEST_CASE("genus counts with oracle") {
  auto res = run("genus-counts --vertices 2 --oracle");
  CHECK(res.exitCode == 0);
  CHECK(res.out.find("\"36\"") != std::string::npos);
  CHECK(res.out.find("\"totalConnected\": 96") != std::string::npos);
}

TEST_CASE("series and constants emit exact strings") {
  auto se = run("series --genus 1 --order 2");
  CHECK(se.exitCode == 0);
  CHECK(se.out.find("\"-1/2\"") != std::string::npos);
  CHECK(se.out.find("\"-1/4\"") != std::string::npos);
  auto co = run("constants --max-genus 2");
  CHECK(co.exitCode == 0);
  CHECK(co.out.find("49*sqrt(3)/71663616") != std::string::npos);
  CHECK(co.out.find("1/1728") != std::string::npos);
}

TEST_CASE("verify battery passes") {
  CHECK(run("verify --all").exitCode == 0);
}

TEST_CASE("deterministic output for a fixed command") {
  auto a = run("series --genus 2 --order 8");
  auto b = run("series --genus 2 --order 8");
  CHECK(a.out == b.out);
}

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  doctest::Context ctx;
  return ctx.run();
}
