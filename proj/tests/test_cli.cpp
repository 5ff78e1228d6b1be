#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "kantor/corpus.hpp"
#include "kantor/io.hpp"

namespace {

std::string cli_path() {
  const char* p = std::getenv("KANTOR_CLI");
  return p ? p : "";
}

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string out_file = "cli_test_stdout.tmp";
  const std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>cli_test_stderr.tmp";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

}  // namespace

TEST_CASE("cli catalog lists the corpus") {
  if (cli_path().empty()) return;  // only run under ctest
  const RunResult r = run_cli("catalog");
  CHECK(r.exit_code == 0);
  for (const char* id : {"unit-field", "split-pair", "quat", "mat2-transpose", "scalar-fkts",
                         "swap-fkts", "osp12", "chevalley-A2", "chevalley-A3", "chevalley-C2"})
    CHECK(r.output.find(id) != std::string::npos);
}

TEST_CASE("cli verify exit codes") {
  if (cli_path().empty()) return;
  CHECK(run_cli("verify quat --suite kantor").exit_code == 0);
  CHECK(run_cli("verify quat --suite structurable").exit_code == 0);

  const RunResult fail = run_cli("verify scalar-fkts --suite fkts:+1,-1");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("FAIL") != std::string::npos);
  CHECK(fail.output.find("lhs=") != std::string::npos);  // witness printed

  {
    std::ofstream bad("cli_test_bad.json");
    bad << "{ this is not json";
  }
  CHECK(run_cli("verify cli_test_bad.json --suite kantor").exit_code == 2);
  CHECK(run_cli("verify quat --suite no-such-suite").exit_code == 2);
  CHECK(run_cli("verify no-such-id --suite kantor").exit_code == 2);
  std::remove("cli_test_bad.json");
}

TEST_CASE("cli convert round-trips the quaternion system") {
  if (cli_path().empty()) return;
  CHECK(run_cli("convert quat-kts --direction kts-to-structurable "
                "--out cli_test_alg.json --map-out cli_test_sigma.json")
            .exit_code == 0);
  CHECK(run_cli("convert cli_test_alg.json --direction structurable-to-kts "
                "--map cli_test_sigma.json --out cli_test_kts.json")
            .exit_code == 0);
  const kantor::SystemFile round = kantor::read_system_file("cli_test_kts.json");
  const kantor::TripleSystem original = kantor::kts_from_structurable(kantor::make_quat());
  CHECK(std::get<kantor::TripleSystem>(round.payload) == original);
  std::remove("cli_test_alg.json");
  std::remove("cli_test_sigma.json");
  std::remove("cli_test_kts.json");
}

TEST_CASE("cli convert mu-normalize and double-m21") {
  if (cli_path().empty()) return;
  {
    const RunResult r = run_cli("convert swap-fkts --direction mu-normalize");
    CHECK(r.exit_code == 0);
    const kantor::SystemFile f = kantor::load_system_file(r.output);
    CHECK(std::get<kantor::TripleSystem>(f.payload) == kantor::make_componentwise_pair());
  }
  {
    const RunResult r = run_cli("convert unit-field-kts --direction double-m21");
    CHECK(r.exit_code == 0);
    const kantor::SystemFile f = kantor::load_system_file(r.output);
    CHECK(f.dim() == 2);
    REQUIRE(f.signs.has_value());
    CHECK(f.signs->epsilon == 1);
    CHECK(f.signs->delta == 1);
  }
}

TEST_CASE("cli build-lie and decompose") {
  if (cli_path().empty()) return;
  {
    const RunResult r = run_cli("build-lie scalar-fkts --out cli_test_g.json");
    CHECK(r.exit_code == 0);
    const kantor::SystemFile f = kantor::read_system_file("cli_test_g.json");
    CHECK(f.dim() == 5);
    std::remove("cli_test_g.json");
  }
  {
    const RunResult r = run_cli("decompose swap-fkts");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("adjoint x2, natural x0, trivial dim 0") != std::string::npos);
  }
  {
    const RunResult r = run_cli("decompose osp12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("adjoint x1, natural x0, trivial dim 0") != std::string::npos);
  }
}

TEST_CASE("cli reports are byte-deterministic") {
  if (cli_path().empty()) return;
  const RunResult a = run_cli("verify swap-fkts --suite lemmas-mm");
  const RunResult b = run_cli("verify swap-fkts --suite lemmas-mm");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const RunResult par = run_cli("verify swap-fkts --suite lemmas-mm --jobs 3");
  CHECK(par.output == a.output);
}
