#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fuzz_support.hpp"
#include "sfs/cli.hpp"
#include "sfs/parse.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sfs");
  std::ostringstream out, err;
  int code = sfs::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  Result r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

// The published report schema: required fields per command, no extras left
// unaccounted, verdict object well-formed.
void check_schema(const json& j, const std::string& command) {
  CHECK(j.at("command") == command);
  if (command == "enumerate") {
    CHECK(j.at("max_alpha").is_number_integer());
    CHECK(j.at("count").is_number_integer());
    CHECK(j.at("results").is_array());
    for (const auto& r : j.at("results")) CHECK(r.is_string());
    return;
  }
  CHECK(j.at("input").is_string());
  CHECK(j.at("normalized").is_string());
  CHECK(j.at("euler").is_string());
  CHECK(j.at("geometry").is_string());
  if (j.contains("verdict")) {
    const json& v = j.at("verdict");
    std::string kind = v.at("kind");
    CHECK((kind == "yes" || kind == "no" || kind == "out_of_scope"));
    if (v.contains("degree")) CHECK(v.at("degree").is_number_integer());
    if (v.contains("orientation"))
      CHECK((v.at("orientation") == "preserving" || v.at("orientation") == "reversing"));
    if (v.contains("reason")) CHECK(v.at("reason").is_string());
  }
}

}  // namespace

TEST_CASE("euler and normalize commands") {
  Result r = run({"euler", "SFS(g=2; b=0;)"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");

  CHECK(run({"euler", "SFS(g=0; b=-1; (5,1),(5,2),(5,1))"}).out == "1/5\n");

  CHECK(run({"normalize", "SFS(g=0; b=-1; (5,6),(5,2),(5,1))"}).out ==
        "SFS(g=0; b=0; (5,1),(5,1),(5,2))\n");
}

TEST_CASE("geometry command") {
  CHECK(run({"geometry", "SFS(g=0; b=0; (2,1),(3,1),(7,1))"}).out == "hyperbolic\n");
  CHECK(run({"geometry", "SFS(g=1; b=0;)"}).out == "parabolic\n");
}

TEST_CASE("covers-t1 reports the congruence failure") {
  Result r = run({"covers-t1", "SFS(g=0; b=-1; (5,1),(5,2),(5,1))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("DoesNotCover") != std::string::npos);
  CHECK(r.out.find("congruence") != std::string::npos);

  Result t1 = run({"covers-t1", "SFS(g=0; b=-1; (5,1),(5,1),(5,1))"});
  CHECK(t1.out.find("Covers(degree=1, preserving)") != std::string::npos);
}

TEST_CASE("decision commands") {
  CHECK(run({"anosov", "SFS(g=2; b=-2;)"}).out.substr(0, 3) == "Yes");
  CHECK(run({"anosov", "SFS(g=2; b=0;)"}).out.substr(0, 3) == "No:");
  CHECK(run({"ph", "SFS(g=1; b=1;)"}).out.substr(0, 10) == "OutOfScope");
  CHECK(run({"turnover-ph", "SFS(g=0; b=-1; (5,1),(5,2),(5,1))"}).out.substr(0, 3) == "No:");
  CHECK(run({"horizontal", "SFS(g=0; b=-1; (5,1),(5,2),(5,1))"}).out.substr(0, 10) ==
        "guaranteed");
  CHECK(run({"milnor-wood", "SFS(g=2; b=-5;)"}).out.substr(0, 8) == "excluded");
  CHECK(run({"double-cover", "SFS(g=n2; b=1;)"}).out == "SFS(g=1; b=2;)\n");
  CHECK(run({"same", "SFS(g=2; b=-2;)", "SFS(g=2; b=2;)"}).out == "same fibered space\n");
  Result oriented = run({"same", "SFS(g=2; b=-2;)", "SFS(g=2; b=2;)", "--oriented"});
  CHECK(oriented.out == "different fibered spaces\n");
}

TEST_CASE("pi1 command") {
  Result r = run({"pi1", "SFS(g=2; b=2;)"});  // eu = -2, so the relator ends in c^2
  CHECK(r.code == 0);
  CHECK(r.out ==
        "a1 b1 a2 b2 c | a1 b1 A1 B1 a2 b2 A2 B2 c c, a1 c A1 C, b1 c B1 C, a2 c A2 C, "
        "b2 c B2 C\n");
  CHECK(run({"pi1", "SFS(g=0; b=-1; (5,1),(5,2),(5,1))"}).code == 3);
}

TEST_CASE("enumerate command lists the odd-alpha family members in order") {
  Result r = run({"enumerate", "--max-alpha", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("SFS(g=0; b=-1; (5,1),(5,1),(5,2))") != std::string::npos);
  CHECK(run({"enumerate", "--max-alpha", "5"}).out == r.out);  // byte-identical reruns

  json j = run_json({"enumerate", "--max-alpha", "9"});
  check_schema(j, "enumerate");
  bool found7 = false;
  for (const auto& s : j["results"])
    if (s == "SFS(g=0; b=-1; (7,1),(7,1),(7,2))") found7 = true;
  CHECK(found7);
}

TEST_CASE("exit codes") {
  CHECK(run({"euler", "SFS(g=0; b=-1"}).code == 2);          // syntax
  CHECK(run({"euler", "SFS(g=0; b=0; (4,2))"}).code == 2);   // semantic
  CHECK(run({"turnover-ph", "SFS(g=2; b=0;)"}).code == 3);   // not a turnover
  CHECK(run({"covers-t1", "SFS(g=1; b=0;)"}).code == 3);     // non-hyperbolic base
  CHECK(run({"covers-t1", "SFS(g=n3; b=0;)"}).code == 3);    // non-orientable base
  CHECK(run({"horizontal", "SFS(g=2; b=0;)"}).code == 3);    // outside stated family
  CHECK(run({"double-cover", "SFS(g=2; b=0;)"}).code == 3);  // base already orientable
  CHECK(run({"nonsense"}).code == 2);                        // usage
  CHECK(run({}).code == 2);                                  // missing subcommand
}

TEST_CASE("json reports carry the shared fields and the verdict") {
  json j = run_json({"covers-t1", "SFS(g=0; b=-1; (5,1),(5,2),(5,1))"});
  check_schema(j, "covers-t1");
  CHECK(j["normalized"] == "SFS(g=0; b=-1; (5,1),(5,1),(5,2))");
  CHECK(j["euler"] == "1/5");
  CHECK(j["geometry"] == "hyperbolic");
  CHECK(j["verdict"]["kind"] == "no");
  CHECK(j["verdict"]["reason"].get<std::string>().find("congruence") != std::string::npos);

  json yes = run_json({"anosov", "SFS(g=2; b=-1;)"});
  CHECK(yes["verdict"]["kind"] == "yes");
  CHECK(yes["verdict"]["degree"] == 2);
  CHECK(yes["verdict"]["orientation"] == "preserving");

  json scope = run_json({"ph", "SFS(g=1; b=0;)"});
  CHECK(scope["verdict"]["kind"] == "out_of_scope");

  json pi1 = run_json({"pi1", "SFS(g=2; b=0;)"});
  CHECK(pi1["presentation"].get<std::string>().find(" | ") != std::string::npos);
}

TEST_CASE("property: json output is schema-clean and byte-deterministic on fuzzed inputs") {
  fuzz::Rng rng(616);
  const std::vector<std::string> commands = {"normalize", "euler", "geometry"};
  for (int i = 0; i < 120; ++i) {
    sfs::SeifertInvariant m = fuzz::random_invariant(rng);
    std::string expr = sfs::render(m);
    const std::string& cmd = commands[static_cast<std::size_t>(i) % commands.size()];

    std::ostringstream out1, err1, out2, err2;
    int c1 = sfs::run_cli({"sfs", cmd, expr, "--format", "json"}, out1, err1);
    int c2 = sfs::run_cli({"sfs", cmd, expr, "--format", "json"}, out2, err2);
    REQUIRE(c1 == 0);
    CHECK(c1 == c2);
    CHECK(out1.str() == out2.str());  // byte-identical
    json j = json::parse(out1.str());
    check_schema(j, cmd);
    // normalized field round-trips through the parser
    CHECK(sfs::render(sfs::parse_sfs(j["normalized"].get<std::string>())) == j["normalized"]);
  }
}

TEST_CASE("verdict-bearing commands are schema-clean on fuzzed hyperbolic inputs") {
  fuzz::Rng rng(617);
  fuzz::InvariantOptions opt;
  opt.force_orientable = true;
  opt.force_hyperbolic = true;
  for (int i = 0; i < 60; ++i) {
    sfs::SeifertInvariant m = fuzz::random_invariant(rng, opt);
    std::string expr = sfs::render(m);
    for (const std::string& cmd : {std::string("anosov"), std::string("ph")}) {
      json j = run_json({cmd, expr});
      check_schema(j, cmd);
    }
  }
}
