#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

int run(const std::string& args) {
  std::string cmd = std::string(OKATLAS_CLI_PATH) + " " + args;
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("verify subcommand exit codes and report") {
  CHECK(run("verify --suite atlas --out /tmp/okatlas_atlas.json "
            ">/dev/null 2>&1") == 0);
  std::string rep = slurp("/tmp/okatlas_atlas.json");
  CHECK(rep.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(rep.find("\"fail\"") == std::string::npos);
  CHECK(run("verify --suite hamiltonian >/dev/null 2>&1") == 0);
  CHECK(run("verify --suite blowup >/dev/null 2>&1") == 0);
  // Usage errors exit with 2.
  CHECK(run("verify --suite nonsense >/dev/null 2>&1") == 2);
  CHECK(run("frobnicate >/dev/null 2>&1") == 2);
  CHECK(run("verify --badflag >/dev/null 2>&1") == 2);
}

TEST_CASE("decompose subcommand") {
  spit("/tmp/okatlas_e2.txt", "(z*(xi^3*z - 2*t*xi^2 - 8))^2");
  CHECK(run("decompose --input /tmp/okatlas_e2.txt --out "
            "/tmp/okatlas_e2.json >/dev/null 2>&1") == 0);
  std::string out = slurp("/tmp/okatlas_e2.json");
  CHECK(out.find("\"M\": 2") != std::string::npos);
  CHECK(out.find("\"N\": -1") != std::string::npos);

  // Non-invariant input: exit 1 with the witness on stderr.
  spit("/tmp/okatlas_z.txt", "z");
  CHECK(run("decompose --input /tmp/okatlas_z.txt "
            ">/dev/null 2>/tmp/okatlas_z.err") == 1);
  CHECK(slurp("/tmp/okatlas_z.err").find("witness") != std::string::npos);

  CHECK(run("decompose --input /tmp/no_such_file_here "
            ">/dev/null 2>&1") == 2);
}

TEST_CASE("integrate subcommand writes trajectory and poles") {
  CHECK(run("integrate --t0 0 --t1 10 --x0 0 --y0 0 "
            "--out /tmp/okatlas_traj.csv --poles /tmp/okatlas_poles.json "
            ">/dev/null 2>&1") == 0);
  std::string csv = slurp("/tmp/okatlas_traj.csv");
  CHECK(csv.rfind("t,chart,c1,c2,branch\n", 0) == 0);
  CHECK(csv.find("ZW") != std::string::npos);
  std::string poles = slurp("/tmp/okatlas_poles.json");
  CHECK(poles.find("2.615571") != std::string::npos);
  CHECK(poles.find("laurent_residual") != std::string::npos);

  // Zero-length interval: header-only CSV and an empty pole list.
  CHECK(run("integrate --t0 3 --t1 3 --x0 0 --y0 0 "
            "--out /tmp/okatlas_empty.csv --poles /tmp/okatlas_empty.json "
            ">/dev/null 2>&1") == 0);
  CHECK(slurp("/tmp/okatlas_empty.csv") == "t,chart,c1,c2,branch\n");
  CHECK(slurp("/tmp/okatlas_empty.json") == "[]");

  CHECK(run("integrate --rtol notanumber >/dev/null 2>&1") == 2);
}

TEST_CASE("blowup-audit emits deterministic artifacts") {
  CHECK(run("blowup-audit --emit-dot /tmp/okatlas_a.dot --emit-log "
            "/tmp/okatlas_a.json >/dev/null 2>&1") == 0);
  CHECK(run("blowup-audit --emit-dot /tmp/okatlas_b.dot --emit-log "
            "/tmp/okatlas_b.json >/dev/null 2>&1") == 0);
  CHECK(slurp("/tmp/okatlas_a.dot") == slurp("/tmp/okatlas_b.dot"));
  CHECK(slurp("/tmp/okatlas_a.json") == slurp("/tmp/okatlas_b.json"));
  std::string dot = slurp("/tmp/okatlas_a.dot");
  // Nine nodes, one per vertical leaf.
  std::size_t nodes = 0, pos = 0;
  while ((pos = dot.find("label=", pos)) != std::string::npos) {
    ++nodes;
    ++pos;
  }
  CHECK(nodes == 9);
  std::string log = slurp("/tmp/okatlas_a.json");
  CHECK(log.find("z8=-z/2") != std::string::npos);
}
