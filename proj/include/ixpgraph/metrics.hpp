#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ixpgraph/error.hpp"
#include "ixpgraph/model.hpp"
#include "ixpgraph/multigraph.hpp"

namespace ixpgraph {

// Histogram over integer values, sorted by value, zero-count values omitted.
struct Distribution {
  std::vector<std::pair<std::int64_t, std::uint64_t>> values;
  std::uint64_t total = 0;

  static Distribution from_histogram(const std::map<std::int64_t, std::uint64_t>& histogram);

  std::uint64_t count(std::int64_t value) const;
  double fraction(std::int64_t value) const;
  // Running share up to and including each entry of `values`.
  std::vector<double> cdf() const;
  // Folds every value >= cap into a single bucket reported as `cap`.
  Distribution bucketed(std::int64_t cap) const;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

Distribution degree_distribution(const BipartiteGraph& graph, NodeClass node_class);

struct TypeFractions {
  double content = 0.0;
  double enterprise = 0.0;
  double isp = 0.0;

  double of(AsType type) const;
};

// Share of each IXP's members per AS type. Unknown-typed members count in the
// denominator only; an IXP without members gets all zeros.
std::map<IxpId, TypeFractions> member_type_fractions(const BipartiteGraph& graph);

// Empirical CDF over IXPs of one type's member share: sorted (fraction, share
// of IXPs with a fraction <= it) points, one per distinct fraction.
std::vector<std::pair<double, double>> member_type_cdf(
    const std::map<IxpId, TypeFractions>& fractions, AsType type);

struct TypeShareRow {
  std::string label;
  std::int64_t threshold = 0;
  std::size_t as_count = 0;
  TypeFractions shares;
};

struct TypeShareTable {
  std::vector<TypeShareRow> rows;
};

// One row per threshold t over the ASes with degree > t; t = 0 covers all
// ASes and is labelled "All ASes".
TypeShareTable type_share_by_degree(const BipartiteGraph& graph,
                                    std::span<const std::int64_t> thresholds);

// Hop distances from `source`; -1 marks unreachable vertices.
std::vector<std::int32_t> bfs_distances(const GraphIndex& index, GraphIndex::Vertex source);

struct PathOptions {
  // Restrict BFS sources to a uniform sample of this many ASes.
  std::optional<std::size_t> sample_size;
  std::uint64_t seed = 42;
  // 0 selects the hardware concurrency.
  unsigned threads = 0;
};

// Number of IXPs crossed (distance / 2) by the shortest BG path of every
// unordered AS pair. With sampling, every pair with at least one sampled
// endpoint is counted once. Throws kDisconnected on an unreachable pair.
Distribution shortest_path_ixp_counts(const BipartiteGraph& graph, PathOptions options = {});

// Histogram of multiplicities over all C(n, 2) unordered node pairs,
// including pairs with multiplicity 0.
template <typename Node, typename Via, NodeClass kClass>
Distribution multiplicity_distribution(const Multigraph<Node, Via, kClass>& mg) {
  std::map<std::int64_t, std::uint64_t> histogram;
  std::uint64_t adjacent = 0;
  mg.for_each_pair([&](auto, auto, std::size_t multiplicity) {
    ++histogram[static_cast<std::int64_t>(multiplicity)];
    ++adjacent;
  });
  const std::uint64_t n = mg.node_count();
  const std::uint64_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (pairs > adjacent) histogram[0] = pairs - adjacent;
  return Distribution::from_histogram(histogram);
}

// Number of ASes that `a` reaches at b's IXPs but not at its own, excluding a
// and b. Throws kNotColocated when a and b share no IXP.
std::size_t remote_peering_gain(const BipartiteGraph& graph, Asn a, Asn b);

// Gain over every ordered pair of co-located ASes.
Distribution remote_peering_gain_cdf(const BipartiteGraph& graph, unsigned threads = 0);

// Pearson correlation; throws kInsufficientData on < 2 points or a constant side.
double pearson(std::span<const double> x, std::span<const double> y);

// Pearson correlation of AS degree against announced prefix count, over ASes
// with prefix data.
double degree_prefix_correlation(const BipartiteGraph& graph);

// Index-level kernels over a simple undirected graph given as sorted
// adjacency lists.
std::vector<double> betweenness_centrality(const std::vector<std::vector<std::uint32_t>>& adjacency,
                                           unsigned threads = 0);
std::vector<double> clustering_coefficient(const std::vector<std::vector<std::uint32_t>>& adjacency);

// Betweenness on the multigraph with multiplicities collapsed, normalised by
// (n-1)(n-2)/2.
template <typename Node, typename Via, NodeClass kClass>
std::map<Node, double> betweenness_centrality(const Multigraph<Node, Via, kClass>& mg,
                                              unsigned threads = 0) {
  if (mg.node_count() == 0) throw Error(ErrorCode::kEmptyGraph, "multigraph has no nodes");
  const auto scores = betweenness_centrality(mg.simple_adjacency(), threads);
  std::map<Node, double> out;
  for (std::size_t i = 0; i < scores.size(); ++i) out.emplace(mg.nodes()[i], scores[i]);
  return out;
}

template <typename Node, typename Via, NodeClass kClass>
std::map<Node, double> clustering_coefficient(const Multigraph<Node, Via, kClass>& mg) {
  if (mg.node_count() == 0) throw Error(ErrorCode::kEmptyGraph, "multigraph has no nodes");
  const auto scores = clustering_coefficient(mg.simple_adjacency());
  std::map<Node, double> out;
  for (std::size_t i = 0; i < scores.size(); ++i) out.emplace(mg.nodes()[i], scores[i]);
  return out;
}

}  // namespace ixpgraph
