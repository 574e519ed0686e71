#include "doctest.h"

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "acs/cli.hpp"
#include "acs/json_io.hpp"
#include "acs/nonadaptive.hpp"

using namespace acs;
using nlohmann::json;

namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
  json parsed;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && (r.out[0] == '{' || r.out[0] == '['))
    r.parsed = json::parse(r.out);
  return r;
}

}  // namespace

TEST_CASE("family and transcript JSON round-trips") {
  const Family f = family_of(5, {{1, 3}, {2}, {4, 5}});
  CHECK(family_from_json(family_to_json(f)) == f);
  const json j = family_to_json(f);
  CHECK(j["n"] == 5);
  CHECK(j["sets"].size() == 3);

  Transcript t;
  t.n = 4;
  t.entries.push_back({0b0101, true});
  t.entries.push_back({0b0010, false});
  CHECK(transcript_from_json(transcript_to_json(t)) == t);
}

TEST_CASE("nonadaptive build emits the family and its size") {
  const CliRun r = cli({"nonadaptive", "build", "--n", "3", "--k", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed["schema_version"] == 1);
  CHECK(r.parsed["h"] == 5);
  CHECK(family_from_json(r.parsed["family"]) == build_family(3, 2));
}

TEST_CASE("nonadaptive decode round-trips through build") {
  const CliRun r = cli({"nonadaptive", "decode", "--n", "3", "--k", "2",
                        "--answers", "[true,false,false,true,true]"});
  REQUIRE(r.code == 0);
  CHECK(family_from_json(r.parsed["antichain"]) == family_of(3, {{1}, {2, 3}}));
}

TEST_CASE("adaptive solve reports transcript, bound, and hidden") {
  const std::vector<std::string> args = {"--seed", "11", "adaptive", "solve",
                                         "--n", "6", "--k", "2", "--random"};
  const CliRun r = cli(args);
  REQUIRE(r.code == 0);
  CHECK(r.parsed["found"] == r.parsed["hidden"]);
  CHECK(r.parsed["queries_used"].get<long long>() <=
        r.parsed["bound"].get<long long>());
  CHECK(r.parsed["transcript"].size() == r.parsed["queries_used"].get<std::size_t>());

  SUBCASE("same argv and seed give byte-identical output") {
    const CliRun again = cli(args);
    CHECK(again.code == 0);
    CHECK(again.out == r.out);
  }
  SUBCASE("a different seed changes the hidden antichain eventually") {
    bool differs = false;
    for (int s = 0; s < 16 && !differs; ++s) {
      const CliRun other = cli({"--seed", std::to_string(100 + s), "adaptive",
                                "solve", "--n", "6", "--k", "2", "--random"});
      differs = other.parsed["hidden"] != r.parsed["hidden"];
    }
    CHECK(differs);
  }
}

TEST_CASE("adaptive solve-k2 respects the 2n bound") {
  const CliRun r = cli({"--seed", "7", "adaptive", "solve-k2", "--n", "16",
                        "--random"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed["found"] == r.parsed["hidden"]);
  CHECK(r.parsed["queries_used"].get<int>() <= 32);
  CHECK(r.parsed["bound"] == 32);
}

TEST_CASE("adaptive exact-f") {
  const CliRun r = cli({"adaptive", "exact-f", "--n", "3", "--k", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed["f"] == 5);
}

TEST_CASE("adversary subcommands") {
  const CliRun play = cli({"adversary", "play", "--n", "7", "--k", "3"});
  REQUIRE(play.code == 0);
  CHECK(play.parsed["lower_bound"] == 11);
  CHECK(play.parsed["queries_used"] == 11);
  CHECK(play.parsed["ok"] == true);

  const CliRun conf = cli({"adversary", "confusion", "--n", "3", "--k", "2",
                           "--family", R"({"n":3,"sets":[[1],[2],[3],[1,3]]})"});
  REQUIRE(conf.code == 0);
  CHECK(conf.parsed["confused"] == true);
  CHECK(conf.parsed["pair"].size() == 2);

  const CliRun cert = cli({"adversary", "certificate-k2", "--n", "12",
                           "--size-a", "11"});
  REQUIRE(cert.code == 0);
  CHECK(cert.parsed["lower_bound"] == 5938186);
  CHECK(cert.parsed["ok"] == true);
}

TEST_CASE("comb subcommands") {
  const CliRun g = cli({"comb", "g", "--n", "6", "--m", "2"});
  REQUIRE(g.code == 0);
  CHECK(g.parsed["g_bruteforce"] == 9);
  CHECK(g.parsed["g_formula"] == 9);

  const CliRun mc = cli({"comb", "mc", "--family", R"({"n":3,"sets":[[1,2],[2,3]]})"});
  REQUIRE(mc.code == 0);
  CHECK(family_from_json(mc.parsed["minimal_covers"]) ==
        family_of(3, {{2}, {1, 3}}));

  const CliRun cnt = cli({"comb", "count-antichains", "--n", "4"});
  REQUIRE(cnt.code == 0);
  CHECK(cnt.parsed["A"] == 55);

  const CliRun h = cli({"comb", "exact-h", "--n", "3", "--k", "2"});
  REQUIRE(h.code == 0);
  CHECK(h.parsed["h"] == 5);
}

TEST_CASE("exit codes") {
  SUBCASE("contract / regime errors exit 1 with an error document") {
    const CliRun r = cli({"nonadaptive", "build", "--n", "2", "--k", "3"});
    CHECK(r.code == 1);
    CHECK(r.parsed["error"]["type"] == "contract");
  }
  SUBCASE("resource errors exit 2") {
    const CliRun r = cli({"comb", "g", "--n", "8", "--m", "4"});
    CHECK(r.code == 2);
    CHECK(r.parsed["error"]["type"] == "resource");
  }
  SUBCASE("usage errors exit 64") {
    CHECK(cli({"nonadaptive", "build", "--n", "3"}).code == 64);
    CHECK(cli({"no-such-command"}).code == 64);
    CHECK(cli({}).code == 64);
  }
  SUBCASE("help exits 0") {
    const CliRun r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
  }
}

TEST_CASE("json indentation is configurable") {
  const CliRun compact = cli({"--json-indent", "-1", "comb",
                              "count-antichains", "--n", "4"});
  REQUIRE(compact.code == 0);
  CHECK(compact.out.find('\n') == compact.out.size() - 1);  // single line
}

TEST_CASE("random_antichain is deterministic and valid") {
  for (auto [n, k] : {std::pair{5, 2}, {6, 3}, {12, 4}, {16, 2}}) {
    const Antichain a = random_antichain(n, k, 42);
    CHECK(a.members.size() == static_cast<std::size_t>(k));
    CHECK(is_antichain(a));
    CHECK(random_antichain(n, k, 42) == a);
  }
  CHECK_THROWS_AS(random_antichain(3, 0, 1), ContractError);
}
