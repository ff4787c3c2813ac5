#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "goodsets/io.hpp"
#include "goodsets/structure.hpp"

namespace fs = std::filesystem;
using goodsets::Json;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("goodsets_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const std::string cmd = std::string(GOODSETS_CLI) + " " + args + " > " + out.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

const char* kFour = R"({"n":3,"points":[["0","0","0"],["0","0","1"],["1","1","0"],["1","1","1"]]})";
const char* kRect = R"({"n":2,"points":[["a","x"],["a","y"],["b","x"],["b","y"]]})";
const char* kChain = R"({"n":2,"points":[["a","x"],["b","x"],["b","y"]]})";
const char* kGrid =
    R"({"n":2,"points":[["a","x"],["a","y"],["a","z"],["b","x"],["b","y"],["b","z"]]})";

}  // namespace

TEST_CASE("analyze") {
  const auto four = write("four.json", kFour);
  const auto r = run("analyze -i " + four.string());
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["structure"]["good"] == false);
  CHECK(doc["partitions"]["relatively_full"]["parts"].size() == 2);
  CHECK(doc["loop_count"] == 1);
  CHECK(doc["uperp"]["dimension"] == 1);
  CHECK(run("analyze -i " + four.string()).out == r.out);

  const auto single = Json::parse(run("analyze -i " + write("single.json", R"({"n":3,"points":[["p","q","r"]]})").string()).out);
  CHECK(single["structure"]["good"] == true);
  CHECK(single["structure"]["full"] == true);

  const auto grid = Json::parse(run("analyze -i " + write("grid.json", kGrid).string()).out);
  CHECK(grid["structure"]["good"] == false);
  CHECK(grid["loop_count"] == 3);
  CHECK(grid["extreme_points"].size() == 6);

  const auto skipped = Json::parse(run("analyze --skip-extreme -i " + four.string()).out);
  CHECK(skipped["extreme_points"].is_null());
  const auto heuristic = Json::parse(run("analyze --heuristic -i " + four.string()).out);
  CHECK(heuristic["partitions"]["relatively_full"]["method"] == "heuristic");
}

TEST_CASE("exit codes") {
  CHECK(run("analyze -i " + write("bad.json", "{").string()).code == 1);
  CHECK(run("analyze -i " + write("dup.json", R"({"n":2,"points":[["a","x"],["a","x"]]})").string()).code == 1);
  CHECK(run("analyze -i " + (scratch() / "missing.json").string()).code == 1);
  CHECK(run("analyze").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("analyze --oracle --heuristic -i " + write("p.json", kFour).string()).code == 1);
  CHECK(run("--help").code == 0);

  const auto grid = write("grid.json", kGrid);
  CHECK(run("loops --cap 2 -i " + grid.string()).code == 3);
  CHECK(run("components --oracle-bound 3 -i " + grid.string()).code == 3);
  const auto fallback = run("components --oracle-bound 3 --heuristic-fallback -i " + grid.string());
  CHECK(fallback.code == 0);
  CHECK(Json::parse(fallback.out)["relatively_full"]["method"] == "heuristic");
  CHECK(run("quotient -i " + grid.string()).code == 2);
}

TEST_CASE("output file is written only on success") {
  const auto target = scratch() / "report.json";
  fs::remove(target);
  CHECK(run("loops -i " + write("rect.json", kRect).string() + " -o " + target.string()).code == 0);
  CHECK(Json::parse(slurp(target))["count"] == 1);
  fs::remove(target);
  CHECK(run("loops --cap 0 -i " + write("grid.json", kGrid).string() + " -o " + target.string()).code == 3);
  CHECK_FALSE(fs::exists(target));
}

TEST_CASE("solve") {
  const auto chain = write("chain.json", kChain);
  const auto f = write("f.json", R"({"values":[{"point":["a","x"],"value":"1"},{"point":["b","x"],"value":"3"},
                                             {"point":["b","y"],"value":"5"}]})");
  const auto ok = run("solve -i " + chain.string() + " -f " + f.string() + " --anchor 0:a");
  REQUIRE(ok.code == 0);
  const auto doc = Json::parse(ok.out);
  CHECK(doc["feasible"] == true);
  CHECK(doc["freedom_dim"] == 0);
  CHECK(doc["bundle"][0]["b"] == "2");
  CHECK(doc["bundle"][1]["x"] == "1");
  CHECK(doc["bundle"][1]["y"] == "3");

  const auto zero = write("zero.json", R"({"values":[{"point":["a","x"],"value":"0"},{"point":["b","x"],"value":0},
                                                   {"point":["b","y"],"value":"0"}]})");
  const auto z = run("solve -i " + chain.string() + " -f " + zero.string());
  CHECK(z.code == 0);
  for (const auto& axis : Json::parse(z.out)["bundle"]) {
    for (const auto& [label, value] : axis.items()) CHECK(value == "0");
  }

  const auto rect = write("rect.json", kRect);
  const auto g = write("g.json", R"({"values":[{"point":["a","x"],"value":"1"},{"point":["a","y"],"value":"2"},
                                             {"point":["b","x"],"value":"2"},{"point":["b","y"],"value":"4"}]})");
  const auto bad = run("solve -i " + rect.string() + " -f " + g.string());
  CHECK(bad.code == 2);
  const auto cert = Json::parse(bad.out);
  CHECK(cert["feasible"] == false);
  CHECK(cert["violated"]["loop"]["points"].size() == 4);

  CHECK(run("solve -i " + chain.string() + " -f " + f.string() + " --anchor 0:zz").code == 2);
  CHECK(run("solve -i " + chain.string() + " -f " + f.string() + " --anchor nonsense").code == 1);
  CHECK(run("solve -i " + rect.string() + " -f " + f.string()).code == 1);
}

TEST_CASE("extend, decompose, extreme, quotient") {
  const auto rect = write("rect.json", kRect);
  const auto g = write("g3.json", R"({"values":[{"point":["a","x"],"value":"1"},{"point":["a","y"],"value":"2"},
                                              {"point":["b","x"],"value":"3"}]})");
  const auto ext = run("extend -i " + rect.string() + " -f " + g.string());
  REQUIRE(ext.code == 0);
  CHECK(Json::parse(ext.out)["function"]["values"][3]["value"] == "4");

  const auto m = write("m.json", R"({"values":[{"point":["a","x"],"value":"2"},{"point":["a","y"],"value":"-2"},
                                             {"point":["b","x"],"value":"-2"},{"point":["b","y"],"value":"2"}]})");
  const auto dec = run("decompose -i " + rect.string() + " -m " + m.string());
  REQUIRE(dec.code == 0);
  const auto d = Json::parse(dec.out);
  CHECK(d["terms"].size() == 1);
  CHECK(d["terms"][0]["scale"] == "2");
  CHECK(d["l1_input"] == "8");
  CHECK(d["l1_terms"] == "8");
  const auto off = write("off.json", R"({"values":[{"point":["a","x"],"value":"1"}]})");
  CHECK(run("decompose -i " + rect.string() + " -m " + off.string()).code == 2);

  const auto ex = Json::parse(run("extreme -i " + rect.string()).out);
  CHECK(ex["count"] == 2);
  CHECK(ex["extreme_points"][0]["values"][0]["value"] == "1/4");

  const auto q = run("quotient -i " + write("pair.json", R"({"n":3,"points":[["0","0","0"],["0","1","1"]]})").string());
  REQUIRE(q.code == 0);
  const auto qd = Json::parse(q.out);
  CHECK(qd["image"]["points"].size() == 2);
  CHECK(qd["image_good"] == true);
  CHECK(qd["image_full"] == false);
}

TEST_CASE("generate") {
  const auto a = run("generate --kind full --n 3 --size 8 --seed 5");
  REQUIRE(a.code == 0);
  CHECK(a.out == run("generate --kind full --n 3 --size 8 --seed 5").out);
  const auto s = goodsets::parse_point_set(a.out);
  CHECK(s.size() == 8);
  CHECK(goodsets::is_full(s));
  const auto loop = goodsets::parse_point_set(run("generate --kind loop --n 2 --seed 3").out);
  CHECK_FALSE(goodsets::is_good(loop));
  CHECK(run("generate --kind cube").code == 1);
  CHECK(run("generate --kind full --n 2 --size 9 --budget 2").code == 2);
  CHECK(run("generate --n 0").code == 1);
}
