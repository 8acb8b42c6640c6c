#include "support/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

namespace ixpgraph::testing {
namespace {

std::string ixp_name(std::size_t i) {
  std::string id = std::to_string(i + 1);
  return "IX" + std::string(id.size() < 4 ? 4 - id.size() : 0, '0') + id;
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

BipartiteGraph random_bipartite(std::mt19937_64& rng, const RandomGraphShape& shape) {
  const std::size_t ixps = uniform(rng, 1, shape.max_ixps);
  const std::size_t ases = uniform(rng, 1, shape.max_ases);
  BipartiteGraph graph;
  for (std::size_t i = 0; i < ixps; ++i) graph.add_ixp({ixp_name(i), {ixp_name(i)}});

  std::bernoulli_distribution isolated(shape.isolated_as);
  std::vector<std::size_t> order(ixps);
  std::iota(order.begin(), order.end(), 0);
  const AsType types[] = {AsType::kContent, AsType::kEnterprise, AsType::kIsp, AsType::kUnknown};
  for (std::size_t a = 0; a < ases; ++a) {
    AsNode node{Asn{static_cast<std::uint32_t>(a + 1)}};
    node.type = types[uniform(rng, 0, 3)];
    node.prefix_count = uniform(rng, 1, 1000);
    graph.add_as(node);
    if (isolated(rng)) continue;
    const std::size_t degree = uniform(rng, 1, std::min(shape.max_degree, ixps));
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 0; k < degree; ++k) {
      graph.add_membership({ixp_name(order[k]), node.asn, std::nullopt, {Source::kPdb}});
    }
  }
  return graph;
}

BipartiteGraph synthetic_scale_graph(std::uint64_t seed, const ScaleShape& shape) {
  std::mt19937_64 rng(seed);
  std::vector<double> tail;
  for (std::size_t d = 2; d <= shape.max_degree; ++d) {
    tail.push_back(std::pow(static_cast<double>(d), -shape.tail_exponent));
  }
  std::discrete_distribution<std::size_t> tail_degree(tail.begin(), tail.end());
  std::bernoulli_distribution degree_one(shape.degree_one_share);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  BipartiteGraph graph;
  for (std::size_t i = 0; i < shape.ixps; ++i) graph.add_ixp({ixp_name(i), {ixp_name(i)}});
  for (std::size_t a = 0; a < shape.ases; ++a) {
    const Asn asn{static_cast<std::uint32_t>(a + 1)};
    graph.add_as({asn});
    const std::size_t degree =
        std::min(shape.ixps, degree_one(rng) ? std::size_t{1} : tail_degree(rng) + 2);
    // Weighted sampling without replacement: keep the `degree` largest
    // u^(1/w) keys, w = 1 / rank.
    using Key = std::pair<double, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> best;
    for (std::size_t i = 0; i < shape.ixps; ++i) {
      const double weight = 1.0 / static_cast<double>(i + 1);
      const double key = std::log(unit(rng)) / weight;
      if (best.size() < degree) {
        best.emplace(key, i);
      } else if (key > best.top().first) {
        best.pop();
        best.emplace(key, i);
      }
    }
    for (; !best.empty(); best.pop()) {
      graph.add_membership({ixp_name(best.top().second), asn, std::nullopt, {Source::kPdb}});
    }
  }
  return giant_component(graph).graph;
}

CoverageInstance random_instance(std::mt19937_64& rng, const RandomInstanceShape& shape) {
  CoverageInstance instance;
  const std::size_t universe = uniform(rng, 1, shape.max_universe);
  const std::size_t candidates = uniform(rng, 1, shape.max_candidates);
  for (std::size_t u = 0; u < universe; ++u) {
    const Asn asn{static_cast<std::uint32_t>(u + 1)};
    instance.universe.push_back(asn);
    instance.weight[asn] = static_cast<double>(uniform(rng, 1, 5));
  }
  std::vector<std::set<Asn>> sets(candidates);
  std::bernoulli_distribution member(0.3);
  for (auto& set : sets) {
    for (const Asn asn : instance.universe) {
      if (member(rng)) set.insert(asn);
    }
  }
  for (const Asn asn : instance.universe) {
    if (std::none_of(sets.begin(), sets.end(), [&](const auto& s) { return s.contains(asn); })) {
      sets[uniform(rng, 0, candidates - 1)].insert(asn);
    }
  }
  for (std::size_t c = 0; c < candidates; ++c) {
    const std::string id = ixp_name(c);
    instance.candidates[id] = std::vector<Asn>(sets[c].begin(), sets[c].end());
    instance.cost[id] = static_cast<double>(uniform(rng, 1, 10));
  }
  return instance;
}

}  // namespace ixpgraph::testing
