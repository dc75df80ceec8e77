#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("uht_cli_test_" + std::to_string(::getpid()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

const fs::path& scratch() {
  static const Scratch s;
  return s.dir;
}

std::string at(const std::string& name) { return (scratch() / name).string(); }

Run run(const std::string& args) {
  const std::string cmd = std::string(UHT_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kK4 =
    "v 0\nv 1\nv 2\nv 3\n"
    "e 0 0 1\ne 1 0 2\ne 2 0 3\ne 3 1 2\ne 4 2 3\ne 5 3 1\n";

}  // namespace

TEST_CASE("generate, embed and verify a scrambled instance") {
  const std::string p = at("s");
  Run g = run("gen --kind scramble -n 12 -m 25 -k 30 --w-size 3 --seed 7 -o " + p);
  REQUIRE(g.status == 0);
  CHECK(read_file(p + ".expected") == "feasible\n");
  const std::string inputs = p + ".graph " + p + ".rot " + p + ".parity " + p + ".w";

  CHECK(run("check " + inputs).status == 0);
  Run s = run("solve " + inputs);
  CHECK(s.status == 0);
  CHECK(s.out.rfind("feasible", 0) == 0);

  Run e = run("embed " + inputs + " -o " + p + ".out --trace " + p + ".trace");
  REQUIRE(e.status == 0);
  CHECK(read_file(p + ".out").find("preserved") != std::string::npos);
  CHECK(read_file(p + ".trace").find("\"case\"") != std::string::npos);

  Run v = run("verify " + p + ".graph " + p + ".out " + p + ".w --against " + p + ".rot");
  CHECK(v.status == 0);
  CHECK(v.out.find("genus 0") != std::string::npos);
  CHECK(v.out.find("ok") != std::string::npos);
}

TEST_CASE("K5 is rejected with a certificate") {
  const std::string p = at("k5");
  REQUIRE(run("gen --kind k5 --seed 3 -o " + p).status == 0);
  Run s = run("solve " + p + ".graph " + p + ".rot " + p + ".parity");
  CHECK(s.status == 2);
  CHECK(s.out.rfind("infeasible", 0) == 0);
  CHECK(s.out.find("cert ") != std::string::npos);
  CHECK(run("solve --mode strong " + p + ".graph " + p + ".rot " + p + ".parity").status == 2);
  CHECK(run("embed " + p + ".graph " + p + ".rot " + p + ".parity").status == 2);
  Run o = run("oracle " + p + ".graph");
  CHECK(o.status == 2);
  CHECK(o.out.find("min-genus 1") != std::string::npos);
}

TEST_CASE("verify catches a tampered rotation at W") {
  const std::string p = at("k4");
  write_file(p + ".graph", kK4);
  // A plane K4: outer triangle 1 2 3 around the hub 0.
  write_file(p + ".rot", "rot 0 0 1 2\nrot 1 0 5 3\nrot 2 1 3 4\nrot 3 2 4 5\n");
  write_file(p + ".bad", "rot 0 0 2 1\nrot 1 0 5 3\nrot 2 1 3 4\nrot 3 2 4 5\n");
  Run ok = run("verify " + p + ".graph " + p + ".rot");
  CHECK(ok.status == 0);
  Run bad = run("verify " + p + ".graph " + p + ".bad --W 0 --against " + p + ".rot");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("failed") != std::string::npos);
}

TEST_CASE("theta with matching orders at both ends") {
  const std::string p = at("theta");
  REQUIRE(run("gen --kind theta -o " + p).status == 0);
  const std::string inputs = p + ".graph " + p + ".rot " + p + ".parity " + p + ".w";
  CHECK(run("solve " + inputs).status == 2);
  CHECK(run("oracle " + p + ".graph " + p + ".rot " + p + ".w").status == 2);
}

TEST_CASE("multigraph instances go through the reduction") {
  const std::string p = at("mg");
  REQUIRE(run("gen --kind multigraph -n 7 -m 10 --copies 3 --loops 2 --w-size 2 --seed 5 -o " + p).status == 0);
  const std::string inputs = p + ".graph " + p + ".rot " + p + ".parity " + p + ".w";
  Run e = run("embed " + inputs + " -o " + p + ".out --log " + p + ".log");
  REQUIRE(e.status == 0);
  CHECK(run("verify " + p + ".graph " + p + ".out " + p + ".w --against " + p + ".rot").status == 0);
}

TEST_CASE("export") {
  const std::string p = at("ex");
  write_file(p + ".graph", kK4);
  write_file(p + ".rot", "rot 0 0 1 2\nrot 1 0 5 3\nrot 2 1 3 4\nrot 3 2 4 5\n");
  Run svg = run("export --format svg " + p + ".graph " + p + ".rot");
  CHECK(svg.status == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  Run dot = run("export --format dot " + p + ".graph " + p + ".rot -o " + p + ".dot");
  CHECK(dot.status == 0);
  CHECK(read_file(p + ".dot").find("--") != std::string::npos);
}

TEST_CASE("errors exit with status 1") {
  const std::string p = at("broken");
  write_file(p + ".graph", "v 0\ne 0 0 4\n");
  Run r = run("solve " + p + ".graph");
  CHECK(r.status == 1);
  CHECK(r.out.find(":2") != std::string::npos);
  CHECK(run("solve " + at("missing.graph")).status == 1);
  CHECK(run("frobnicate").status != 0);
}
