#include <doctest.h>

#include <random>

#include "ixpgraph/error.hpp"
#include "ixpgraph/model.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace ixpgraph;
using namespace ixpgraph::testing;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ixpgraph::Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("ASN parsing accepts plain, AS-prefixed and short fixture forms") {
  CHECK(parse_asn("64500") == Asn{64500});
  CHECK(parse_asn("AS64500") == Asn{64500});
  CHECK(parse_asn("as7") == Asn{7});
  CHECK(parse_asn("A1") == Asn{1});
  CHECK_FALSE(parse_asn("0"));
  CHECK_FALSE(parse_asn("abc"));
  CHECK_FALSE(parse_asn(""));
  CHECK_FALSE(parse_asn("4294967296"));
  CHECK_FALSE(parse_asn("-3"));
}

TEST_CASE("enum labels round-trip") {
  for (auto type : {AsType::kContent, AsType::kEnterprise, AsType::kIsp, AsType::kUnknown}) {
    CHECK(parse_as_type(to_string(type)) == type);
  }
  for (auto status : {IxpStatus::kActive, IxpStatus::kInactive, IxpStatus::kNotApproved}) {
    CHECK(parse_ixp_status(to_string(status)) == status);
  }
  for (auto source : {Source::kPdb, Source::kPch, Source::kOther}) {
    CHECK(parse_source(to_string(source)) == source);
  }
  for (auto relation : {Relation::kPeerToPeer, Relation::kCustomerToProvider,
                        Relation::kProviderToCustomer, Relation::kUnknown}) {
    CHECK(parse_relation(to_string(relation)) == relation);
  }
  CHECK(parse_as_type("Transit/Access") == AsType::kIsp);
  CHECK(parse_ixp_status("not approved") == IxpStatus::kNotApproved);
  CHECK(parse_relation("0") == Relation::kPeerToPeer);
  CHECK(parse_relation("-1") == Relation::kProviderToCustomer);
}

TEST_CASE("add_membership on a minimal graph") {
  BipartiteGraph graph;
  graph.add_ixp({"X1", {"X1"}});
  graph.add_as({A1});
  graph.add_membership({"X1", A1, std::nullopt, {Source::kPdb}});
  CHECK(graph.edge_count() == 1);

  SUBCASE("repeated pair merges sources") {
    graph.add_membership({"X1", A1, IpAddress::parse("192.0.2.1"), {Source::kPch}});
    REQUIRE(graph.edge_count() == 1);
    const auto& edge = graph.edges().begin()->second;
    CHECK(edge.sources == std::set<Source>{Source::kPdb, Source::kPch});
    CHECK(edge.member_ip == IpAddress::parse("192.0.2.1"));
  }
  SUBCASE("unknown endpoint") {
    CHECK(code_of([&] { graph.add_membership({"X9", A1, std::nullopt, {Source::kPdb}}); }) ==
          ErrorCode::kUnknownEndpoint);
    CHECK(code_of([&] { graph.add_membership({"X1", Asn{9}, std::nullopt, {Source::kPdb}}); }) ==
          ErrorCode::kUnknownEndpoint);
  }
  SUBCASE("duplicate vertices are rejected") {
    CHECK(code_of([&] { graph.add_ixp({"X1", {"again"}}); }) == ErrorCode::kInvalidArgument);
    CHECK(code_of([&] { graph.add_as({A1}); }) == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("degrees on G0") {
  const auto g0 = make_g0();
  CHECK(g0.degree(IxpId{"X1"}) == 3);
  CHECK(g0.degree(IxpId{"X2"}) == 3);
  CHECK(g0.degree(IxpId{"X3"}) == 1);
  CHECK(g0.degree(A1) == 2);
  CHECK(g0.degree(A4) == 1);
  CHECK(g0.edge_count() == 7);
  CHECK(code_of([&] { (void)g0.degree(IxpId{"X9"}); }) == ErrorCode::kUnknownNode);
  CHECK(code_of([&] { (void)g0.degree(Asn{99}); }) == ErrorCode::kUnknownNode);

  BipartiteGraph isolated;
  isolated.add_as({A1});
  CHECK(isolated.degree(A1) == 0);
}

TEST_CASE("AS prefix list and count stay consistent") {
  BipartiteGraph graph;
  graph.add_as({A1});
  graph.set_as_prefixes(A1, {"192.0.2.0/24", "198.51.100.0/24"});
  CHECK(graph.as_node(A1).prefix_count == 2u);
  CHECK_NOTHROW(graph.set_as_prefix_count(A1, 2));
  CHECK(code_of([&] { graph.set_as_prefix_count(A1, 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("GraphIndex lays out IXPs before ASes") {
  const auto g0 = make_g0();
  const GraphIndex index(g0);
  CHECK(index.ixp_count() == 3);
  CHECK(index.as_count() == 4);
  CHECK(index.vertex_count() == 7);
  const auto x1 = *index.find(IxpId{"X1"});
  CHECK(index.is_ixp(x1));
  CHECK(index.neighbors(x1).size() == 3);
  const auto a4 = *index.find(A4);
  CHECK_FALSE(index.is_ixp(a4));
  CHECK(index.asn(a4) == A4);
  CHECK(index.neighbors(a4).size() == 1);
  CHECK_FALSE(index.find(Asn{77}));
}

TEST_CASE("giant component") {
  SUBCASE("G0 is kept as is") {
    const auto result = giant_component(make_g0());
    CHECK(result.graph.vertex_count() == 7);
    CHECK(result.graph.edge_count() == 7);
    CHECK(result.nodes_discarded == 0);
    CHECK(result.edges_discarded == 0);
  }
  SUBCASE("a disconnected pair is dropped") {
    auto graph = make_g0();
    graph.add_ixp({"X9", {"X9"}});
    graph.add_as({Asn{9}});
    graph.add_membership({"X9", Asn{9}, std::nullopt, {Source::kPdb}});
    const auto result = giant_component(graph);
    CHECK(result.graph.vertex_count() == 7);
    CHECK(result.nodes_discarded == 2);
    CHECK(result.edges_discarded == 1);
    CHECK_FALSE(result.graph.has_ixp("X9"));
  }
  SUBCASE("equal vertex counts prefer more edges") {
    BipartiteGraph graph;
    // Component one: path X1 - A1 - X2 - A2 (4 nodes, 3 edges).
    // Component two: cycle X3 - A3 - X4 - A4 - X3 (4 nodes, 4 edges).
    for (const char* id : {"X1", "X2", "X3", "X4"}) graph.add_ixp({id, {id}});
    for (std::uint32_t a = 1; a <= 4; ++a) graph.add_as({Asn{a}});
    graph.add_membership({"X1", A1, std::nullopt, {Source::kPdb}});
    graph.add_membership({"X2", A1, std::nullopt, {Source::kPdb}});
    graph.add_membership({"X2", A2, std::nullopt, {Source::kPdb}});
    graph.add_membership({"X3", A3, std::nullopt, {Source::kPdb}});
    graph.add_membership({"X4", A3, std::nullopt, {Source::kPdb}});
    graph.add_membership({"X3", A4, std::nullopt, {Source::kPdb}});
    graph.add_membership({"X4", A4, std::nullopt, {Source::kPdb}});
    const auto result = giant_component(graph);
    CHECK(result.graph.edge_count() == 4);
    CHECK(result.graph.has_ixp("X3"));
    CHECK(result.nodes_discarded == 4);
    CHECK(result.edges_discarded == 3);
  }
  SUBCASE("full ties go to the component holding the smallest id") {
    BipartiteGraph graph;
    graph.add_ixp({"X2", {"X2"}});
    graph.add_ixp({"X1", {"X1"}});
    graph.add_as({A2});
    graph.add_as({A1});
    graph.add_membership({"X2", A1, std::nullopt, {Source::kPdb}});
    graph.add_membership({"X1", A2, std::nullopt, {Source::kPdb}});
    CHECK(giant_component(graph).graph.has_ixp("X1"));
  }
  SUBCASE("empty graph") {
    CHECK(code_of([] { giant_component(BipartiteGraph{}); }) == ErrorCode::kEmptyGraph);
  }
}

TEST_CASE("giant component is connected and maximal on random graphs") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    const auto graph = random_bipartite(rng, {20, 60, 3, 0.2});
    const auto result = giant_component(graph);
    const GraphIndex index(result.graph);
    std::vector<bool> seen(index.vertex_count(), false);
    std::vector<GraphIndex::Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto w : index.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    CHECK(reached == index.vertex_count());
    for (const auto& [key, edge] : graph.edges()) {
      CHECK(result.graph.has_ixp(key.first) == result.graph.has_as(key.second));
    }
    CHECK(result.graph.vertex_count() + result.nodes_discarded == graph.vertex_count());
    CHECK(result.graph.edge_count() + result.edges_discarded == graph.edge_count());
  }
}

TEST_CASE("policy layer orientation") {
  PolicyLayer policy;
  policy.set(Asn{20}, Asn{10}, Relation::kCustomerToProvider);
  CHECK(policy.get(Asn{20}, Asn{10}) == Relation::kCustomerToProvider);
  CHECK(policy.get(Asn{10}, Asn{20}) == Relation::kProviderToCustomer);
  CHECK_FALSE(policy.get(Asn{10}, Asn{30}));
  policy.set(Asn{10}, Asn{20}, Relation::kPeerToPeer);
  CHECK(policy.size() == 1);
  CHECK(policy.get(Asn{20}, Asn{10}) == Relation::kPeerToPeer);
}
