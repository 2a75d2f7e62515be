// Exercises the installed command line surface end to end: every
// subcommand, each output format, and the documented exit codes. Expects
// the CLI binary path as argv[1].

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

int failures = 0;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& cli, const std::string& args) {
  const std::string command = cli + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    result.exit_code = -1;
    return result;
  }
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cout << "FAIL: " << what << "\n";
  }
}

void expect_contains(const RunResult& r, const std::string& needle,
                     const std::string& what) {
  expect(r.output.find(needle) != std::string::npos,
         what + " (missing `" + needle + "`)");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cout << "usage: test_cli <path-to-cli>\n";
    return 1;
  }
  const std::string cli = argv[1];

  {
    const auto r = run(cli, "info --gens 3,4,5");
    expect(r.exit_code == 0, "info exits 0");
    expect_contains(r, "\"genus\": 2", "info reports the genus");
    expect_contains(r, "\"type\": 2", "info reports the type");
  }
  {
    const auto r = run(cli, "hilbert --gens 2,3 --ideal 2,3 --nmax 4");
    expect(r.exit_code == 0, "hilbert exits 0");
    expect_contains(r, "\"values\": [\n      1,\n      3,\n      5,\n      7,\n      9\n    ]",
                    "hilbert table of the maximal ideal");
  }
  {
    const auto r = run(cli, "coeffs --gens 4,5,6,7 --ideal 4,5,6");
    expect(r.exit_code == 0, "coeffs exits 0");
    expect_contains(r, "\"e1\": 3", "coeffs matches the type rule");
  }
  {
    const auto r = run(cli, "power --gens 2,3 --ideal 2,3 --k 5");
    expect(r.exit_code == 0, "power exits 0");
    expect_contains(r, "\"e0\": 10", "power scales e0");
  }
  {
    const auto r = run(cli, "delta --gens 3,4,5 --format csv");
    expect(r.exit_code == 0, "delta csv exits 0");
    expect_contains(r, "result.delta[2],2", "delta csv rows");
  }
  {
    const auto r = run(cli, "oversemigroups --gens 3,4,5");
    expect(r.exit_code == 0, "oversemigroups exits 0");
    expect_contains(r, "\"count\": 3", "oversemigroup count");
  }
  {
    const auto r = run(cli, "chain --gens 3,4,5 --format plain");
    expect(r.exit_code == 0, "chain exits 0");
    expect_contains(r, "chain_realizes_descending_e1", "chain check line");
  }
  {
    const auto r = run(cli,
                       "idealization --gens 2,3 --b-ideal 2,3 --ideal 2 "
                       "--submodule \"\"");
    expect(r.exit_code == 0, "idealization exits 0");
    expect_contains(r, "\"e1\": -1", "idealization realizes negative e1");
  }
  {
    const auto r = run(cli, "pairideal --a 5 --b 2");
    expect(r.exit_code == 0, "pairideal exits 0");
    expect_contains(r, "\"e1\": 3", "pair ideal e1 = a - b");
  }
  {
    const auto r = run(cli, "predict --e0 3 --e1 2 --d 2 --k 2");
    expect(r.exit_code == 0, "predict exits 0");
    expect_contains(r, "\"e1_power\": 7", "predict d = 2 branch");
  }
  {
    const auto r = run(cli, "verify --max-genus 3 --max-gens 2");
    expect(r.exit_code == 0, "verify exits 0 when all checks pass");
    expect_contains(r, "\"checks_failed\": 0", "verify failure counter");
  }

  // Usage and input errors exit 1.
  expect(run(cli, "info --gens 2,4").exit_code == 1, "gcd error exits 1");
  expect(run(cli, "info --gens 3,a").exit_code == 1, "parse error exits 1");
  expect(run(cli, "nonsense").exit_code == 1, "unknown subcommand exits 1");
  expect(run(cli, "coeffs --gens 3,4,5 --ideal 1").exit_code == 1,
         "gap exponent exits 1");
  expect(run(cli, "pairideal --a 2 --b 5").exit_code == 1,
         "invalid pair exits 1");
  expect(run(cli, "info").exit_code == 1, "missing required option exits 1");

  if (failures) {
    std::cout << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
