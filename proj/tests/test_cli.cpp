#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "sgsim/analytic.hpp"
#include "sgsim/csv.hpp"

namespace fs = std::filesystem;

namespace {

const char* cli_path() { return SGSIM_CLI_PATH; }

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

RunResult run_cli(const std::string& args, const fs::path& dir) {
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string("\"") + cli_path() + "\" " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {code, slurp(out), slurp(err)};
}

std::string last_line(const std::string& text) {
  std::size_t end = text.find_last_not_of('\n');
  if (end == std::string::npos) return "";
  std::size_t start = text.rfind('\n', end);
  return text.substr(start + 1, end - start);
}

fs::path scratch() {
  const fs::path dir = fs::path("cli_scratch");
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("analytic ops print verifiable single-value tables") {
  const fs::path dir = scratch();
  RunResult r = run_cli("analytic median --c 1", dir);
  REQUIRE(r.code == 0);
  CHECK_NOTHROW(sgsim::verify_table(r.out));
  CHECK(std::stod(last_line(r.out)) ==
        doctest::Approx(1.09905466915886620).epsilon(1e-13));
  CHECK(std::stod(last_line(r.out)) == sgsim::levy_median(1.0));

  r = run_cli("analytic q-factor --r 0.5 --outer 2", dir);
  REQUIRE(r.code == 0);
  CHECK(std::stod(last_line(r.out)) ==
        doctest::Approx(0.643501108793284387).epsilon(1e-13));

  r = run_cli("analytic decision --r 1 --predicted 0.25 --noise 0.25 --eps-db 3",
              dir);
  REQUIRE(r.code == 0);
  CHECK(last_line(r.out) == "1");

  r = run_cli("analytic erfc-inv --x 0.5", dir);
  REQUIRE(r.code == 0);
  CHECK(std::stod(last_line(r.out)) ==
        doctest::Approx(0.476936276204469873).epsilon(1e-13));
}

TEST_CASE("failures exit nonzero with a machine-readable error line") {
  const fs::path dir = scratch();
  RunResult r = run_cli("analytic median", dir);
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(r.out.empty());

  r = run_cli("analytic no-such-op --c 1", dir);
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: ", 0) == 0);

  r = run_cli("frobnicate", dir);
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);

  r = run_cli("zone-sweep --config /nonexistent/z.cfg", dir);
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: ", 0) == 0);

  r = run_cli("--help", dir);
  CHECK(r.code == 0);
}

TEST_CASE("zone sweep: config driven, byte stable, verifiable") {
  const fs::path dir = scratch();
  const fs::path cfg = dir / "zone.cfg";
  {
    std::ofstream f(cfg);
    f << "[zone]\nr_list = 0.0, 0.5\nagg = 1.0\nfraction = 0.01\n";
  }
  const fs::path out1 = dir / "zone1.csv";
  const fs::path out2 = dir / "zone2.csv";
  RunResult r1 = run_cli("zone-sweep --config " + cfg.string() + " --out " + out1.string(), dir);
  RunResult r2 = run_cli("zone-sweep --config " + cfg.string() + " --out " + out2.string(), dir);
  REQUIRE(r1.code == 0);
  REQUIRE(r2.code == 0);
  const std::string t1 = slurp(out1);
  CHECK(t1 == slurp(out2));
  CHECK_NOTHROW(sgsim::verify_table(t1));
  CHECK(t1.find("# subcommand: zone-sweep\n") != std::string::npos);
  CHECK(t1.find("r,agg,phi,zone_radius,median_at_zone\n") != std::string::npos);

  RunResult v = run_cli("verify " + out1.string(), dir);
  CHECK(v.code == 0);
  CHECK(v.out.rfind("ok ", 0) == 0);

  std::string tampered = t1;
  tampered[tampered.size() - 2] = tampered[tampered.size() - 2] == '1' ? '2' : '1';
  const fs::path bad = dir / "zone_bad.csv";
  {
    std::ofstream f(bad, std::ios::binary);
    f << tampered;
  }
  RunResult vb = run_cli("verify " + bad.string(), dir);
  CHECK(vb.code == 1);
  CHECK(vb.err.rfind("error: ", 0) == 0);
}
