// Runs the totcof executable as a subprocess.

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = (env.empty() ? "" : "env " + env + " ") + "'" TOTCOF_CLI "' " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path work_dir() {
  const auto dir = std::filesystem::path(TOTCOF_WORK_DIR) / "cli";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& content) {
  const auto path = work_dir() / name;
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSegment = R"({"elements":["a","b","ab"],"covers":[["a","ab"],["b","ab"]],"ideal":["a"]})";

}  // namespace

TEST_CASE("check on the square", "[cli]") {
  const Run r = run("check --generate cube:2 --json");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.output);
  CHECK(j["result"]["p1"]["holds"] == true);
  CHECK(j["result"]["p2"]["holds"] == true);
  CHECK(j["result"]["witnesses"].empty());
  const Run text = run("check --generate cube:2 --strict");
  CHECK(text.status == 0);
  CHECK(text.output.find("P1: holds") != std::string::npos);
  CHECK(text.output.find("P2: holds") != std::string::npos);
}

TEST_CASE("lim^1 of constant Z on the circle", "[cli]") {
  const Run r = run("limp --generate cube:2-boundary --constant Z --p 1");
  REQUIRE(r.status == 0);
  CHECK(r.output.find("lim^1 = Z\n") != std::string::npos);
  const json j = json::parse(run("limp --generate cube:2-boundary --constant Z --p 1 --json").output);
  CHECK(j["result"]["groups"][0] == json({{"p", 1}, {"free_rank", 1}, {"torsion", json::array()}}));
}

TEST_CASE("verify on the square with a random diagram", "[cli]") {
  const Run r = run("verify --generate cube:2 --random-diagram seed=7 --strict");
  REQUIRE(r.status == 0);
  CHECK(r.output.find("H_n(holim)") != std::string::npos);
  CHECK(r.output.find("all degrees isomorphic") != std::string::npos);
  const json j = json::parse(run("verify --generate cube:2 --random-diagram seed=7 --json").output);
  CHECK(j["result"]["comparison"]["all_isomorphic"] == true);
  CHECK(j["result"]["comparison"]["ball_dimension"] == 2);
  CHECK(!j["result"]["comparison"]["degrees"].empty());
  // --seed feeds a bare --random-diagram
  CHECK(run("verify --generate cube:2 --random-diagram --seed 7 --json").output == run("verify --generate cube:2 --random-diagram seed=7 --json").output);
}

TEST_CASE("identical jobs give byte-identical reports", "[cli][determinism]") {
  const std::string jobs[] = {
      "check --generate cube:3",
      "homology --generate 'prism(simplex:1,cube:1)'",
      "limp --generate cube:2-boundary --random-diagram seed=4 --q 1",
      "gamma --generate simplex:2 --random-diagram seed=9",
      "holim --generate cube:2 --random-diagram seed=2",
      "verify --generate simplex:2 --random-diagram seed=3",
      "ss --generate cube:2 --random-diagram seed=6 --field fp:2",
  };
  int k = 0;
  for (const auto& job : jobs) {
    INFO(job);
    const std::string a = (work_dir() / ("a" + std::to_string(k) + ".json")).string();
    const std::string b = (work_dir() / ("b" + std::to_string(k) + ".json")).string();
    ++k;
    const Run ra = run(job + " --out '" + a + "'");
    const Run rb = run(job + " --out '" + b + "'");
    REQUIRE(ra.status == 0);
    REQUIRE(rb.status == 0);
    CHECK(ra.output == rb.output);
    const std::string ja = slurp(a);
    CHECK(!ja.empty());
    CHECK(ja == slurp(b));
    CHECK(json::parse(ja).contains("conventions"));
  }
}

TEST_CASE("strict mode and exit codes", "[cli]") {
  const std::string seg = write("segment.json", kSegment);
  const Run relaxed = run("check --poset '" + seg + "'");
  CHECK(relaxed.status == 0);
  CHECK(relaxed.output.find("P2 at ab: H_1(Cone(beta)) = Z") != std::string::npos);
  CHECK(run("check --poset '" + seg + "' --strict").status == 1);

  const std::string broken = write("broken.json", "{\n \"elements\": [\"a\"\n");
  const Run parse = run("check --poset '" + broken + "'");
  CHECK(parse.status == 2);
  CHECK(parse.output.find("line 3") != std::string::npos);

  const std::string non_ideal =
      write("non_ideal.json", R"({"elements":["a","b","ab"],"covers":[["a","ab"],["b","ab"]],"ideal":["ab"]})");
  const Run v = run("check --poset '" + non_ideal + "'");
  CHECK(v.status == 2);
  CHECK(v.output.find("'a' <= 'ab'") != std::string::npos);

  CHECK(run("check").status == 2);
  CHECK(run("check --generate cube:2 --poset '" + seg + "'").status == 2);
  CHECK(run("holim --generate cube:2").status == 2);
  CHECK(run("holim --generate cube:2 --constant Z --random-diagram seed=1").status == 2);
  CHECK(run("ss --generate cube:2 --constant Z --field fp:6").status == 2);
  CHECK(run("homology --generate cube:2 --degrees 3..1").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("GAMMA_MAX_ELEMENTS caps poset size", "[cli]") {
  const Run r = run("check --generate cube:2", "GAMMA_MAX_ELEMENTS=5");
  CHECK(r.status == 2);
  CHECK(r.output.find("cap") != std::string::npos);
  CHECK(run("check --generate cube:2", "GAMMA_MAX_ELEMENTS=9").status == 0);
}

TEST_CASE("diagram files with an embedded poset", "[cli]") {
  const std::string text = R"({"kind":"complexes",
    "poset":{"elements":["a","b","ab"],"covers":[["a","ab"],["b","ab"]],"ideal":["a","b"],"ball_dimension":1},
    "values":{"a":{"lo":0,"bases":[["z"]]},"b":{"lo":0,"bases":[["z"]]},"ab":{"lo":0,"bases":[["z"]]}},
    "maps":[{"cover":["a","ab"],"components":[{"degree":0,"matrix":{"rows":1,"cols":1,"entries":[[0,0,"1"]]}}]},
            {"cover":["b","ab"],"components":[{"degree":0,"matrix":{"rows":1,"cols":1,"entries":[[0,0,"1"]]}}]}]})";
  const std::string file = write("segment_diagram.json", text);
  // Gamma of constant Z on a 1-ball is the suspension: H_1 = Z
  const json g = json::parse(run("gamma --diagram '" + file + "' --json").output);
  bool found = false;
  for (const auto& rec : g["result"]["homology"])
    if (rec["free_rank"] != 0) {
      CHECK(rec["degree"] == 1);
      found = true;
    }
  CHECK(found);
  CHECK(run("verify --diagram '" + file + "' --strict").status == 0);
  CHECK(run("gamma --diagram '" + file + "' --generate cube:2").status == 2);
  const std::string bad = write("bad_diagram.json", R"({"kind":"complexes","values":{}})");
  const Run r = run("holim --diagram '" + bad + "'");
  CHECK(r.status == 2);
  CHECK(r.output.find("embeds no poset") != std::string::npos);
}

TEST_CASE("degree window on ss", "[cli]") {
  const json all = json::parse(run("ss --generate cube:2 --constant Z --json").output);
  const json cut = json::parse(run("ss --generate cube:2 --constant Z --json --degrees 5..6").output);
  CHECK(!all["result"]["e_infinity"].empty());
  CHECK(cut["result"]["e_infinity"].empty());
  CHECK(cut["result"]["pages"][0]["dims"].empty());
}
