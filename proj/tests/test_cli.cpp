#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "crystal/cli.hpp"

using namespace crystal;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("crystal_cli_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("gen, check and iso round trip") {
  TempDir t;
  REQUIRE(run({"gen", "--hw", "1,1", "--out", t / "p.json"}).code == kExitPass);
  REQUIRE(run({"gen", "--hw", "1,1", "--method", "axioms", "--out", t / "s.json"}).code == kExitPass);
  const Run c = run({"check", "--in", t / "p.json", "--hw", "1,1"});
  CHECK(c.code == kExitPass);
  CHECK(c.out.rfind("pass: 16 vertices", 0) == 0);
  CHECK(run({"check", "--in", t / "s.json"}).code == kExitPass);

  const Run iso = run({"iso", t / "s.json", t / "p.json", "--out", "-"});
  CHECK(iso.code == kExitPass);
  CHECK(iso.out.rfind("[[0,0],", 0) == 0);

  // Reading and writing a document again changes nothing.
  const Run again = run({"gen", "--hw", "1,1"});
  CHECK(again.out == slurp(t / "p.json"));
}

TEST_CASE("non-isomorphic and failing inputs") {
  TempDir t;
  run({"gen", "--hw", "1,1", "--out", t / "a.json"});
  run({"gen", "--hw", "3,0", "--out", t / "b.json"});
  CHECK(run({"iso", t / "a.json", t / "b.json"}).code == kExitFail);
  CHECK(run({"check", "--in", t / "a.json", "--hw", "3,0"}).code == kExitFail);

  // Drop the first arrow.
  std::string text = slurp(t / "a.json");
  const auto begin = text.find("\"edges\": [") + 10;
  const auto end = text.find('}', begin) + 1;
  text.erase(begin, end - begin + 1);
  spit(t / "broken.json", text);
  const Run r = run({"check", "--in", t / "broken.json", "--report", "-"});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("\"pass\": false") != std::string::npos);
  CHECK(run({"iso", t / "broken.json", t / "a.json"}).code == kExitInput);
}

TEST_CASE("input errors map to exit code 2") {
  TempDir t;
  spit(t / "bad.json", "{ not json");
  CHECK(run({"check", "--in", t / "bad.json"}).code == kExitInput);
  CHECK(run({"check", "--in", t / "missing.json"}).code == kExitInput);
  CHECK(run({"gen", "--hw", "1"}).code == kExitInput);
  CHECK(run({"gen", "--hw", "x,1"}).code == kExitInput);
  CHECK(run({"gen", "--gcm", "b3", "--hw", "1,0,0"}).code == kExitInput);
  CHECK(run({"gen", "--gcm", "g2", "--hw", "1,0"}).code == kExitInput);
  CHECK(run({"gen", "--hw", "1,1", "--method", "magic"}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
}

TEST_CASE("custom matrices and the rank three generator") {
  TempDir t;
  spit(t / "a2.json", "[[2,-1],[-1,2]]");
  const Run r = run({"gen", "--gcm", "custom:" + (t / "a2.json"), "--hw", "1,0", "--method", "axioms"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("\"max\": 0") != std::string::npos);
  run({"gen", "--gcm", "b3", "--hw", "1,0,0", "--method", "axioms", "--out", t / "b3.json"});
  CHECK(run({"check", "--in", t / "b3.json"}).out.rfind("pass: 7 vertices", 0) == 0);
}

TEST_CASE("budget exhaustion maps to exit code 3") {
  ::setenv("CRYSTAL_BUDGET", "10", 1);
  CHECK(run({"gen", "--hw", "3,3"}).code == kExitBudget);
  CHECK(run({"gen", "--hw", "3,3", "--method", "axioms"}).code == kExitBudget);
  ::setenv("CRYSTAL_BUDGET", "ten", 1);
  CHECK(run({"gen", "--hw", "1,1"}).code == kExitInput);
  ::unsetenv("CRYSTAL_BUDGET");
}

TEST_CASE("DOT export is deterministic") {
  TempDir t;
  run({"gen", "--hw", "1,1", "--out", t / "p.json"});
  const Run a = run({"export-dot", "--in", t / "p.json"});
  const Run b = run({"export-dot", "--in", t / "p.json"});
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("digraph crystal {", 0) == 0);
  CHECK(a.out.find("[penwidth=3]") != std::string::npos);
  CHECK(a.out.find("[label=\"2\"]") != std::string::npos);
}

TEST_CASE("verification subcommand") {
  TempDir t;
  const Run ok = run({"verify-paper", "--max-hw", "1", "--max-box", "3", "--json", t / "r.json"});
  CHECK(ok.code == kExitPass);
  CHECK(slurp(t / "r.json").find("\"pass\": false") == std::string::npos);
  CHECK(run({"verify-paper", "--max-hw", "0", "--max-box", "1"}).code == kExitPass);
  const Run bug = run({"verify-paper", "--max-hw", "0", "--max-box", "3", "--inject-lemma-bug"});
  CHECK(bug.code == kExitFail);
  CHECK(bug.out.find("FAIL") != std::string::npos);
  CHECK(run({"verify-paper", "--max-box", "0"}).code == kExitInput);
}
