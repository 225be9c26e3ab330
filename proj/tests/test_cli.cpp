#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string temp_path(const std::string& name) { return std::string(TOUGH_TEST_TMP) + "/" + name; }

Run run(const std::string& args) {
  std::string out_file = temp_path("cli_out.txt");
  std::string cmd = std::string("\"") + TOUGHCLI_PATH + "\" " + args + " > \"" + out_file + "\" 2>&1";
  int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("analyze exits 0 on the fixtures") {
  Run r = run("analyze -g Cl --t 1/1");
  CHECK(r.status == 0);
  CHECK(r.out.find("minimally_t_tough=yes") != std::string::npos);
  CHECK(r.out.find("delta=2") != std::string::npos);
  r = run("analyze -g C~ --t 1 --json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"tau\": \"inf\"") != std::string::npos);
}

TEST_CASE("operational errors exit 1") {
  CHECK(run("analyze -g 'C' --t 1").status == 1);
  CHECK(run("analyze -g Cl --t 0.5").status == 1);
  CHECK(run("analyze -g Cl --t -1/2").status == 1);
  CHECK(run("scan /nonexistent/file").status == 1);
  CHECK(run("scan --check nonsense --enumerate 3").status == 1);
  CHECK(run("frobnicate").status == 1);
}

TEST_CASE("selftest passes and catches an injected fault") {
  CHECK(run("selftest").status == 0);
  CHECK(run("selftest --inject-fault").status != 0);
  Run missing = run("selftest --fixtures /no/such/fixtures.txt");
  CHECK(missing.status == 1);
  CHECK(missing.out.find("fixture file not found: /no/such/fixtures.txt") != std::string::npos);
  CHECK(run(std::string("selftest --fixtures ") + TOUGH_FIXTURE_DIR + "/toughness.txt").status == 0);
}

TEST_CASE("scan reports are identical across worker counts") {
  std::string a = temp_path("scan_w1.json"), b = temp_path("scan_w4.json");
  CHECK(run("scan --enumerate 6 --t 1 --verbose --workers 1 --report " + a).status == 0);
  CHECK(run("scan --enumerate 6 --t 1 --verbose --workers 4 --report " + b).status == 0);
  std::string ja = slurp(a);
  CHECK_FALSE(ja.empty());
  CHECK(ja == slurp(b));
}

TEST_CASE("scan reads graph6 from a file and counts malformed lines") {
  std::string input = temp_path("input.g6");
  {
    std::ofstream f(input);
    f << "Cl\nbad line\nDhc\n";
  }
  Run r = run("scan " + input + " --t 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("malformed 1") != std::string::npos);
  CHECK(run("scan " + input + " --t 1 --strict").status == 1);
  Run piped = run("scan - --t 1 < " + input);
  CHECK(piped.status == 0);
}

TEST_CASE("a t=2 corpus without qualifying graphs says so") {
  Run r = run("scan --enumerate 5 --t 2 --filter claw-free --filter minimal");
  CHECK(r.status == 0);
  CHECK(r.out.find("no qualifying graphs") != std::string::npos);
}
