#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fpaths/family.hpp"

using namespace fpaths;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("table reproduces both marginal tables") {
  auto h = run({"table", "--which", "h"});
  CHECK(h.code == 0);
  CHECK(h.out == "1\n1 1\n2 3 1\n5 9 6 1\n13 30 26 10 1\n36 100 110 60 15 1\n");
  auto l = run({"table", "--which", "l"});
  CHECK(l.out == "1\n1 1\n1 4 1\n1 9 10 1\n1 16 42 20 1\n1 25 120 140 35 1\n");
  CHECK(lines(run({"table", "--which", "h", "--max-n", "7"}).out).size() == 8);
  CHECK(run({"table", "--which", "x"}).code == 2);
}

TEST_CASE("map routes through the path hub") {
  auto r = run({"map", "--from", "perm", "--to", "inv-j"}, "2 3 1\n");
  CHECK(r.code == 0);
  CHECK(r.out == "0,1,1\n");
  auto s = run({"map", "--from", "schroder", "--to", "tree"}, "uudd\n\nhh\r\n");
  CHECK(s.out == "[(1 L L)]\n[L L L]\n");
  auto bad = run({"map", "--from", "perm", "--to", "tree"}, "2 3 4 1\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run({"map", "--from", "fpath", "--to", "schroder"}, "0,1 x\n").code == 2);
}

TEST_CASE("map is the identity and hub round trips close") {
  for (Family f : kAllFamilies) {
    const auto objects = run({"enumerate", "--family", family_name(f), "--n", "4"}).out;
    CHECK(run({"map", "--from", family_name(f), "--to", family_name(f)}, objects).out == objects);
    for (Family g : kAllFamilies) {
      const auto there = run({"map", "--from", family_name(f), "--to", family_name(g)}, objects);
      REQUIRE(there.code == 0);
      const auto back = run({"map", "--from", family_name(g), "--to", family_name(f)}, there.out);
      CHECK(back.out == objects);
    }
  }
}

TEST_CASE("enumerate --stats agrees with stats") {
  for (Family f : kAllFamilies) {
    const auto with = lines(run({"enumerate", "--family", family_name(f), "--n", "3", "--stats"}).out);
    REQUIRE(with.size() == 21);
    std::string objects, triples;
    for (const auto& line : with) {
      const auto tab = line.find('\t');
      REQUIRE(tab != std::string::npos);
      objects += line.substr(0, tab) + "\n";
      triples += line.substr(tab + 1) + "\n";
    }
    CHECK(run({"stats", "--family", family_name(f)}, objects).out == triples);
  }
  CHECK(run({"enumerate", "--family", "fpath", "--n", "0"}).out == "-\n");
  CHECK(run({"enumerate", "--family", "nope", "--n", "1"}).code == 2);
  CHECK(run({"enumerate", "--family", "fpath"}).code == 2);
}

TEST_CASE("count") {
  CHECK(run({"count", "--n", "2"}).out == "6\n");
  CHECK(run({"count", "--n", "5", "--h", "2"}).out == "110\n");
  CHECK(run({"count", "--n", "5", "--l", "2"}).out == "120\n");
  CHECK(run({"count", "--n", "2", "--h", "1", "--l", "1", "--m", "1"}).out == "2\n");
  CHECK(run({"count", "--n", "2", "--refined", "0,0,0,2,2"}).out == "1\n");
  CHECK(run({"count", "--n", "2", "--refined", "0,0,1"}).code == 2);
  CHECK(run({"count", "--n", "-3"}).code == 2);
}

TEST_CASE("sequence") {
  CHECK(run({"sequence", "--max-n", "6"}).out == "1, 2, 6, 21, 80, 322, 1347\n");
  CHECK(run({"sequence", "--max-n", "2", "--bfile"}).out == "0 1\n1 2\n2 6\n");
  CHECK(run({"sequence"}).code == 2);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--max-n", "3", "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 failed") != std::string::npos);
  const auto path = std::filesystem::temp_directory_path() / "fpaths_verify_test.json";
  CHECK(run({"verify", "--max-n", "2", "--quiet", "--json", path.string()}).code == 0);
  std::ifstream file(path);
  const auto j = nlohmann::json::parse(file);
  CHECK(j["failed"] == 0);
  std::filesystem::remove(path);
  CHECK(run({"verify", "--json", "/nonexistent/dir/x.json", "--max-n", "0"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);
}
