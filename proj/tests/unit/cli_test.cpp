#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "ixpgraph/cli.hpp"
#include "ixpgraph/serialize.hpp"
#include "support/fixtures.hpp"

using namespace ixpgraph;
using namespace ixpgraph::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string g0_file(bool typed = false) {
  const auto dir = scratch_dir(typed ? "cli-g0-typed" : "cli-g0");
  const auto path = dir / "g0.json";
  save_graph(path, make_g0(typed));
  return path.string();
}

}  // namespace

TEST_CASE("metrics subcommand on G0") {
  const auto g0 = g0_file();

  auto result = run({"metrics", "degree-cdf", g0, "--class", "ixp"});
  CHECK(result.code == kExitOk);
  CHECK(result.out == "degree,count,cdf\n1,1,0.3333333333333333\n3,2,1\n");

  result = run({"metrics", "table2", g0});
  CHECK(result.code == kExitOk);
  CHECK(result.out == "ixps_crossed,pairs,percent\n1,5,83.3\n2,1,16.7\n");

  result = run({"metrics", "table3", g0, "--json"});
  CHECK(result.code == kExitOk);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["percent"].get<double>() == doctest::Approx(100.0 / 3).epsilon(1e-15));

  result = run({"metrics", "table3", g0, "--class", "as", "--bucket", "2"});
  CHECK(result.out == "multiplicity,pairs,percent\n0,1,16.7\n1,4,66.7\n>=2,1,16.7\n");

  result = run({"metrics", "gain", g0, "--as", "A1", "--via", "A2"});
  CHECK(result.out == "as,via,gain\n1,2,1\n");

  result = run({"metrics", "nonsense", g0});
  CHECK(result.code == kExitDomainError);
  CHECK(result.err.find("Usage") != std::string::npos);

  result = run({"metrics", "table1", g0});
  CHECK(result.code == kExitDomainError);
  CHECK(result.err.find("MissingAttribute") != std::string::npos);

  result = run({"metrics", "table1", g0_file(true), "--thresholds", "0,1"});
  CHECK(result.code == kExitOk);
  CHECK(result.out ==
        "subset,ases,content,enterprise,isp\nAll ASes,4,25.0,25.0,50.0\n"
        "ASes with degree >1,3,33.3,0.0,66.7\n");

  result = run({"metrics", "table3", g0, "--class", "ixp", "--policy", "x.csv"});
  CHECK(result.code == kExitDomainError);

  result = run({"metrics", "degree-cdf", g0, "--class", "router"});
  CHECK(result.code == kExitUsageError);
}

TEST_CASE("place subcommand on G0") {
  const auto g0 = g0_file();

  auto result = run({"place", "cover", g0, "--targets", "A1,A2,A3,A4"});
  REQUIRE(result.code == kExitOk);
  auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["chosen"] == nlohmann::json({"X1", "X2"}));
  CHECK(doc["total_cost"].get<double>() == 2.0);

  result = run({"place", "budget", g0, "--budget", "1", "--targets", "all"});
  REQUIRE(result.code == kExitOk);
  doc = nlohmann::json::parse(result.out);
  CHECK(doc["chosen"] == nlohmann::json({"X1"}));
  CHECK(doc["total_weight"].get<double>() == 3.0);

  result = run({"place", "tunnels", g0, "--as", "A1"});
  REQUIRE(result.code == kExitOk);
  doc = nlohmann::json::parse(result.out);
  CHECK(doc["tunnels"] == nlohmann::json::parse(R"([{"asn":2,"gain":1},{"asn":3,"gain":1}])"));

  result = run({"place", "cover", g0, "--targets", "A1,A9"});
  CHECK(result.code == kExitDomainError);
  CHECK(result.err.find("UnknownTarget") != std::string::npos);

  result = run({"place", "site", g0, "--country", "DE"});
  CHECK(result.code == kExitDomainError);

  result = run({"place", "cover", g0, "--targets", "A1,xyz"});
  CHECK(result.code == kExitUsageError);
}

TEST_CASE("uncoverable targets print their residue") {
  auto graph = make_g0();
  graph.add_as({Asn{5}});
  const auto path = scratch_dir("cli-uncoverable") / "g.json";
  save_graph(path, graph);
  const auto result = run({"place", "cover", path.string(), "--targets", "1,5"});
  CHECK(result.code == kExitDomainError);
  CHECK(result.err.find("AS5") != std::string::npos);
}

TEST_CASE("export and import") {
  const auto g0 = g0_file();
  auto result = run({"export", g0, "--format", "edgelist"});
  CHECK(result.code == kExitOk);
  CHECK(result.out == "X1\t1\nX1\t2\nX1\t3\nX2\t2\nX2\t3\nX2\t4\nX3\t1\n");

  result = run({"export", g0, "--format", ""});
  CHECK(result.code == kExitDomainError);
  CHECK(result.err.find("Usage") != std::string::npos);
  CHECK(run({"export", g0}).code == kExitDomainError);

  const auto dir = scratch_dir("cli-roundtrip");
  const auto first = (dir / "first.json").string();
  const auto second = (dir / "second.json").string();
  CHECK(run({"export", g0, "--format", "json", "--out", first}).code == kExitOk);
  CHECK(run({"import", first, "--format", "json", "--out", second}).code == kExitOk);
  CHECK(read_text(first) == read_text(second));
  CHECK(read_text(first) == read_text(g0));

  CHECK(run({"export", "/nonexistent/graph.json", "--format", "json"}).code == kExitDomainError);
}

TEST_CASE("build subcommand") {
  const auto dir = scratch_dir("cli-build");
  const auto out = (dir / "graph.json").string();
  const auto data = data_dir();
  auto result = run({"build", "--pdb", (data / "sanitize_pdb.csv").string(), "--pch",
                     (data / "sanitize_pch.csv").string(), "--as-types",
                     (data / "as_types.csv").string(), "--locations",
                     (data / "locations.csv").string(), "--out", out});
  REQUIRE(result.code == kExitOk);
  CHECK(result.out.find("graph: 2 ixps, 4 ases, 6 edges") != std::string::npos);
  CHECK(result.out.find("NotInGiantComponent: 2 nodes, 1 edges") != std::string::npos);
  const auto graph = load_graph(out);
  CHECK(graph.ixp("IXP0001").location->city == "Frankfurt");
  CHECK(graph.as_node(Asn{300}).type == AsType::kIsp);

  result = run({"build", "--pdb", (data / "inactive_only.csv").string(), "--pch",
                (data / "empty_pch.csv").string(), "--out", (dir / "x.json").string()});
  CHECK(result.code == kExitDomainError);
  CHECK(result.err.find("EmptyGraph") != std::string::npos);

  CHECK(run({"build", "--pdb", "a.csv"}).code == kExitUsageError);
  CHECK(run({}).code == kExitUsageError);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("thread settings") {
  const auto g0 = g0_file();
  CHECK(run({"--threads", "3", "metrics", "gain-cdf", g0}).code == kExitOk);
  CHECK(run({"metrics", "gain-cdf", g0, "--threads", "2"}).code == kExitOk);
  ::setenv("IXPGRAPH_THREADS", "many", 1);
  CHECK(run({"metrics", "gain-cdf", g0}).code == kExitUsageError);
  ::setenv("IXPGRAPH_THREADS", "2", 1);
  CHECK(run({"metrics", "gain-cdf", g0}).code == kExitOk);
  ::unsetenv("IXPGRAPH_THREADS");
}
