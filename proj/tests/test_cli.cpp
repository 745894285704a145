#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("llt_cli_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const fs::path p = path / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }
};

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = llt::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string strip_timing(std::string text) {
  return std::regex_replace(text, std::regex("\"timing\": [0-9.e+-]+"), "\"timing\": X");
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build writes a tree and a clean report") {
  TempDir dir;
  const std::string metric = dir.file("m.txt", "line 64\n");
  const std::string tree = dir.file("t.txt");
  const std::string report = dir.file("r.json");
  const RunResult r =
      run_cli({"build", "--input", metric, "--h", "4", "--out", tree, "--report", report});
  CHECK(r.status == 0);
  std::ifstream rf(report);
  std::stringstream buf;
  buf << rf.rdbuf();
  const std::string text = buf.str();
  CHECK(text.find("\"command\": \"build\"") != std::string::npos);
  CHECK(text.find("\"regime\": \"low\"") != std::string::npos);
  CHECK(text.find("\"holds\": false") == std::string::npos);
  std::ifstream tf(tree);
  std::string first;
  std::getline(tf, first);
  CHECK(first.rfind("root ", 0) == 0);
}

TEST_CASE("identical invocations give identical bytes modulo timing") {
  TempDir dir;
  const std::string metric = dir.file("m.txt", "points 2\n0 0\n1 0\n0 1\n2 2\n3 1\n0.5 2\n");
  auto once = [&](const std::string& tag) {
    const std::string tree = dir.file("t_" + tag + ".txt");
    const std::string report = dir.file("r_" + tag + ".json");
    const RunResult r =
        run_cli({"sllt", "--input", metric, "--h", "2", "--theta", "0.5", "--out", tree,
                 "--report", report});
    CHECK(r.status == 0);
    std::ifstream tf(tree), rf(report);
    std::stringstream t, rep;
    t << tf.rdbuf();
    rep << rf.rdbuf();
    return std::pair{t.str(), strip_timing(rep.str())};
  };
  const auto a = once("a");
  const auto b = once("b");
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
}

TEST_CASE("metrics reproduces the depth-1 covering") {
  TempDir dir;
  const std::string metric = dir.file("m.txt", "line 7\n");
  const std::string tree =
      dir.file("t.txt", "root 4\n4 1 3\n4 2 2\n4 3 1\n4 5 1\n4 6 2\n4 7 3\n");
  const RunResult r = run_cli({"metrics", "--input", tree, "--metric", metric});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"depth\": 1") != std::string::npos);
  CHECK(r.out.find("\"max_covering\": 2") != std::string::npos);
}

TEST_CASE("oracle agreement checks pass") {
  const RunResult r = run_cli({"oracle", "--n", "7", "--h", "2", "--stat", "hamming"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"value\": 5") != std::string::npos);
  CHECK(r.out.find("closed-form-equals-greedy") != std::string::npos);
}

TEST_CASE("tradeoff emits one row per depth") {
  std::ostringstream out, err;
  const int status = llt::cli::run({"tradeoff", "--n", "6", "--out", "-"}, out, err);
  CHECK(status == 0);
  const std::string text = out.str();
  int lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 6);  // header plus h = 1..5
  CHECK(text.rfind("h,regime,", 0) == 0);
}

TEST_CASE("unknown commands and bad inputs exit 2") {
  CHECK(run_cli({"frobnicate"}).status == 2);
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"build", "--h", "3"}).status == 2);  // missing --input
  TempDir dir;
  const std::string bad = dir.file("bad.txt", "matrix 2\n0 1\n2 0\n");
  CHECK(run_cli({"build", "--input", bad, "--h", "1"}).status == 2);
}

TEST_CASE("normalize modes run end to end") {
  TempDir dir;
  const std::string metric = dir.file("m.txt", "line 6\n");
  const std::string tree = dir.file("t.txt", "root 1\n1 2 1\n1 3 2\n1 4 3\n1 5 4\n1 6 5\n");
  for (const std::string mode : {"4ary", "binary", "deepen"}) {
    const std::string out_tree = dir.file("out_" + mode + ".txt");
    const RunResult r = run_cli({"normalize", "--input", tree, "--metric", metric, "--mode",
                                 mode, "--out", out_tree});
    CHECK(r.status == 0);
  }
  CHECK(run_cli({"normalize", "--input", tree, "--metric", metric, "--mode", "bogus"}).status ==
        2);
}

}  // TEST_SUITE
