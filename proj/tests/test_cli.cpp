#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kTmp = MMCC_TEST_TMPDIR;

constexpr const char* kLine4 =
    R"({"n":4,"depots":[0,3],"k":2,"epsilon":0.25,"matrix":[[0,1,2,3],[1,0,1,2],[2,1,0,1],[3,2,1,0]]})";

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write(const std::string& name, const std::string& text) {
  fs::create_directories(kTmp);
  const fs::path p = kTmp / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

Run run(const std::string& args, const std::string& env = "") {
  fs::create_directories(kTmp);
  const fs::path out = kTmp / "stdout.txt";
  const fs::path err = kTmp / "stderr.txt";
  const std::string cmd = env + " \"" + std::string(MMCC_CLI_PATH) + "\" " + args + " >\"" + out.string() +
                          "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("solve line4") {
  const auto in = write("line4.json", kLine4);
  const auto r = run("solve --input " + in.string());
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["objective"] == 2.0);
  CHECK(doc["cycles"].size() == 2);
}

TEST_CASE("solve maps failures to exit codes") {
  CHECK(run("solve --input " + write("bad.json", "{\"n\":").string()).code == 3);
  const auto asym = write("asym.json", R"({"n":2,"depots":[0],"k":1,"epsilon":0.5,"matrix":[[0,1],[2,0]]})");
  const auto r = run("solve --input " + asym.string());
  CHECK(r.code == 2);
  CHECK(r.err.find("asymmetric") != std::string::npos);
  const auto in = write("line4.json", kLine4);
  CHECK(run("solve --input " + in.string() + " --epsilon 1.5").code == 2);
  CHECK(run("solve --input " + (kTmp / "missing.json").string()).code == 1);
  CHECK(run("solve").code != 0);
}

TEST_CASE("epsilon override reaches the solution and the trace") {
  const auto in = write("line4.json", kLine4);
  const auto trace = kTmp / "trace.csv";
  const auto base = run("solve --input " + in.string() + " --trace " + trace.string());
  REQUIRE(base.code == 0);
  const std::string base_trace = slurp(trace);
  const auto r = run("solve --input " + in.string() + " --epsilon 0.5 --trace " + trace.string());
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["epsilon"] == 0.5);
  const std::string wide_trace = slurp(trace);
  CHECK(wide_trace.rfind("candidate,ell,a,b,lambda,tree_count,feasible,cover_weight\n", 0) == 0);
  CHECK(wide_trace.size() < base_trace.size());
}

TEST_CASE("solve output is reproducible") {
  const auto gen = run("gen --n 40 --m 3 --k 5 --seed 11");
  REQUIRE(gen.code == 0);
  const auto in = write("g40.json", gen.out);
  const auto a = run("solve --no-timing --parallelism 1 --input " + in.string());
  const auto b = run("solve --no-timing --parallelism 1 --input " + in.string());
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = run("solve --no-timing --parallelism 4 --input " + in.string());
  CHECK(json::parse(c.out)["objective"] == json::parse(a.out)["objective"]);
  CHECK(json::parse(c.out)["candidate_id"] == json::parse(a.out)["candidate_id"]);
  const auto d = run("solve --no-timing --input " + in.string(), "MMCC_PARALLELISM=3");
  CHECK(d.out == a.out);
  const auto e = run("solve --no-timing --input " + in.string(), "MMCC_PARALLELISM=zero");
  CHECK(e.code == 0);
  CHECK(e.err.find("MMCC_PARALLELISM") != std::string::npos);
}

TEST_CASE("solve writes DOT and output files on request") {
  const auto in = write("line4.json", kLine4);
  const auto dot = kTmp / "cover.dot";
  const auto out = kTmp / "solution.json";
  REQUIRE(run("solve --input " + in.string() + " --dot " + dot.string() + " --output " + out.string()).code == 0);
  const std::string text = slurp(dot);
  CHECK(text.find("graph forest") != std::string::npos);
  CHECK(text.find("graph cover") != std::string::npos);
  CHECK(json::parse(slurp(out))["objective"] == 2.0);
}

TEST_CASE("verify") {
  const auto in = write("line4.json", kLine4);
  const auto r = run("verify --input " + in.string());
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["lambda_star"] == 2.0);
  CHECK(doc["alg_objective"] == 2.0);
  CHECK(doc["ratio"] == 1.0);

  const auto big = run("gen --n 20 --m 2 --k 3 --seed 1");
  REQUIRE(big.code == 0);
  CHECK(run("verify --input " + write("g20.json", big.out).string()).code == 5);
}

TEST_CASE("verify passes on a seed sweep") {
  for (int seed = 0; seed < 10; ++seed) {
    const auto gen = run("gen --n 8 --m 2 --k 3 --seed " + std::to_string(seed));
    REQUIRE(gen.code == 0);
    CHECK(run("verify --input " + write("sweep.json", gen.out).string()).code == 0);
  }
}

TEST_CASE("gen") {
  const auto a = run("gen --n 8 --m 2 --k 3 --seed 7");
  const auto b = run("gen --n 8 --m 2 --k 3 --seed 7");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("gen --n 8 --m 2 --k 3 --seed 8").out != a.out);
  CHECK(run("gen --n 8 --m 9").code == 2);
  const auto doc = json::parse(a.out);
  CHECK(doc["n"] == 8);
  CHECK(doc["k"] == 3);
  CHECK(doc["depots"].size() == 2);
}

TEST_CASE("bench") {
  const auto r = run("bench --n 1 --m 1 --k 1 --instances 1 --repeats 1");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("n,m,k,candidates,iterations,elapsed_ms,objective\n1,1,1,1,", 0) == 0);
  const auto ladder = run("bench --n 20,40 --m 2 --instances 1 --repeats 1");
  REQUIRE(ladder.code == 0);
  CHECK(ladder.out.find("# size_slope,") != std::string::npos);
}
