// Randomised invariants checked against the reference oracles.
#include <doctest.h>

#include <random>

#include "ixpgraph/ingest.hpp"
#include "ixpgraph/metrics.hpp"
#include "ixpgraph/projection.hpp"
#include "ixpgraph/serialize.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ixpgraph;
using namespace ixpgraph::testing;

namespace {

using Histogram = std::map<std::int64_t, std::uint64_t>;
Histogram as_map(const Distribution& d) { return {d.values.begin(), d.values.end()}; }

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

TEST_CASE("projections match brute force and the pair-count identity") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 40; ++round) {
    const auto graph = random_bipartite(rng, {15, 40, 4, 0.1});
    const auto ixp_mg = project_ixps(graph);
    const auto as_mg = project_ases(graph);

    std::uint64_t expected_ixp = 0;
    for (const auto& [asn, node] : graph.ases()) expected_ixp += choose2(graph.degree(asn));
    std::uint64_t expected_as = 0;
    for (const auto& [id, node] : graph.ixps()) expected_as += choose2(graph.degree(id));
    CHECK(ixp_mg.edge_count() == expected_ixp);
    CHECK(as_mg.edge_count() == expected_as);
    CHECK(ixp_mg.node_count() == graph.ixps().size());

    std::map<std::pair<IxpId, IxpId>, std::set<Asn>> ixp_pairs;
    for (const auto& e : ixp_mg.edges()) ixp_pairs[{e.u, e.v}].insert(e.via);
    CHECK(ixp_pairs == oracle::ixp_projection(graph));
    std::map<std::pair<Asn, Asn>, std::set<IxpId>> as_pairs;
    for (const auto& e : as_mg.edges()) as_pairs[{e.u, e.v}].insert(e.via);
    CHECK(as_pairs == oracle::as_projection(graph));

    CHECK(as_map(multiplicity_distribution(ixp_mg)) ==
          oracle::multiplicity_histogram(graph, NodeClass::kIxp));
    CHECK(as_map(multiplicity_distribution(as_mg)) ==
          oracle::multiplicity_histogram(graph, NodeClass::kAs));
    CHECK(multiplicity_distribution(ixp_mg).total == choose2(graph.ixps().size()));

    for (const auto node_class : {NodeClass::kIxp, NodeClass::kAs}) {
      const auto d = degree_distribution(graph, node_class);
      CHECK(as_map(d) == oracle::degree_histogram(graph, node_class));
    }
  }
}

TEST_CASE("policy filtering never raises a multiplicity") {
  std::mt19937_64 rng(8);
  const Relation relations[] = {Relation::kPeerToPeer, Relation::kCustomerToProvider,
                                Relation::kProviderToCustomer, Relation::kUnknown};
  for (int round = 0; round < 25; ++round) {
    const auto graph = random_bipartite(rng, {6, 20, 3, 0.0});
    const auto mg = project_ases(graph);
    PolicyLayer policy;
    std::bernoulli_distribution present(0.6);
    mg.for_each_pair([&](auto u, auto v, std::size_t) {
      if (present(rng)) policy.set(mg.nodes()[u], mg.nodes()[v], relations[rng() % 4]);
    });
    for (const bool keep : {false, true}) {
      const auto filtered = apply_policy(mg, policy, {keep}).graph;
      CHECK(filtered.edge_count() + apply_policy(mg, policy, {keep}).dropped_edges ==
            mg.edge_count());
      for (const auto& e : mg.edges()) {
        CHECK(filtered.multiplicity(e.u, e.v) <= mg.multiplicity(e.u, e.v));
      }
    }
  }
}

TEST_CASE("path counts, parity and gains agree with the oracles") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 25; ++round) {
    const auto graph = giant_component(random_bipartite(rng, {8, 30, 3, 0.0})).graph;
    if (graph.ases().size() < 2) continue;
    CHECK(as_map(shortest_path_ixp_counts(graph, {std::nullopt, 42, 2})) ==
          oracle::path_histogram(graph));

    const GraphIndex index(graph);
    for (std::size_t r = 0; r < index.as_count(); ++r) {
      const auto distances = bfs_distances(index, index.as_vertex(r));
      for (std::size_t v = 0; v < distances.size(); ++v) {
        CHECK(distances[v] >= 0);
        CHECK(distances[v] % 2 == (index.is_ixp(static_cast<GraphIndex::Vertex>(v)) ? 1 : 0));
      }
    }

    const auto gains = remote_peering_gain_cdf(graph, 3);
    CHECK(as_map(gains) == oracle::gain_histogram(graph));
    for (const auto& [gain, count] : gains.values) {
      CHECK(gain >= 0);
      CHECK(gain <= static_cast<std::int64_t>(graph.ases().size()) - 2);
    }
  }
}

TEST_CASE("pearson matches the textbook formula") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> value(-50, 50);
  for (int round = 0; round < 50; ++round) {
    std::vector<double> x(2 + rng() % 20);
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = value(rng);
      y[i] = 0.5 * x[i] + value(rng);
    }
    CHECK(pearson(x, y) == doctest::Approx(oracle::pearson(x, y)).epsilon(1e-9));
  }
}

TEST_CASE("serialisation round-trips random graphs") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 30; ++round) {
    const auto graph = random_bipartite(rng, {10, 50, 4, 0.1});
    const auto text = write_graph_json(graph);
    CHECK(write_graph_json(read_graph_json(text)) == text);
  }
}
