#include "ixpgraph/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <iterator>
#include <numeric>
#include <random>

#include "parallel.hpp"

namespace ixpgraph {
namespace {

using Histogram = std::map<std::int64_t, std::uint64_t>;

void require_vertices(const BipartiteGraph& graph) {
  if (graph.empty()) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
}

Histogram merge(const std::vector<Histogram>& parts) {
  Histogram out;
  for (const auto& part : parts) {
    for (const auto& [value, count] : part) out[value] += count;
  }
  return out;
}

}  // namespace

Distribution Distribution::from_histogram(const Histogram& histogram) {
  Distribution out;
  for (const auto& [value, count] : histogram) {
    if (count == 0) continue;
    out.values.emplace_back(value, count);
    out.total += count;
  }
  return out;
}

std::uint64_t Distribution::count(std::int64_t value) const {
  auto it = std::lower_bound(values.begin(), values.end(), value,
                             [](const auto& entry, std::int64_t v) { return entry.first < v; });
  return it != values.end() && it->first == value ? it->second : 0;
}

double Distribution::fraction(std::int64_t value) const {
  return total == 0 ? 0.0 : static_cast<double>(count(value)) / static_cast<double>(total);
}

std::vector<double> Distribution::cdf() const {
  std::vector<double> out;
  out.reserve(values.size());
  std::uint64_t running = 0;
  for (const auto& [value, count] : values) {
    running += count;
    out.push_back(static_cast<double>(running) / static_cast<double>(total));
  }
  return out;
}

Distribution Distribution::bucketed(std::int64_t cap) const {
  Histogram histogram;
  for (const auto& [value, count] : values) histogram[std::min(value, cap)] += count;
  return from_histogram(histogram);
}

Distribution degree_distribution(const BipartiteGraph& graph, NodeClass node_class) {
  require_vertices(graph);
  Histogram histogram;
  if (node_class == NodeClass::kIxp) {
    for (const auto& [id, node] : graph.ixps()) {
      ++histogram[static_cast<std::int64_t>(graph.degree(id))];
    }
  } else {
    for (const auto& [asn, node] : graph.ases()) {
      ++histogram[static_cast<std::int64_t>(graph.degree(asn))];
    }
  }
  return Distribution::from_histogram(histogram);
}

double TypeFractions::of(AsType type) const {
  switch (type) {
    case AsType::kContent: return content;
    case AsType::kEnterprise: return enterprise;
    case AsType::kIsp: return isp;
    case AsType::kUnknown: break;
  }
  return 0.0;
}

namespace {

template <typename Range>
TypeFractions type_shares(const BipartiteGraph& graph, const Range& asns) {
  std::size_t total = 0, content = 0, enterprise = 0, isp = 0;
  for (const Asn asn : asns) {
    ++total;
    switch (graph.as_node(asn).type) {
      case AsType::kContent: ++content; break;
      case AsType::kEnterprise: ++enterprise; break;
      case AsType::kIsp: ++isp; break;
      case AsType::kUnknown: break;
    }
  }
  if (total == 0) return {};
  const auto share = [total](std::size_t n) {
    return static_cast<double>(n) / static_cast<double>(total);
  };
  return {share(content), share(enterprise), share(isp)};
}

}  // namespace

std::map<IxpId, TypeFractions> member_type_fractions(const BipartiteGraph& graph) {
  require_vertices(graph);
  std::map<IxpId, TypeFractions> out;
  for (const auto& [id, node] : graph.ixps()) {
    out.emplace(id, type_shares(graph, graph.members(id)));
  }
  return out;
}

std::vector<std::pair<double, double>> member_type_cdf(
    const std::map<IxpId, TypeFractions>& fractions, AsType type) {
  std::vector<double> values;
  values.reserve(fractions.size());
  for (const auto& [id, f] : fractions) values.push_back(f.of(type));
  std::sort(values.begin(), values.end());

  std::vector<std::pair<double, double>> out;
  const auto n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
    out.emplace_back(values[i], static_cast<double>(i + 1) / n);
  }
  return out;
}

TypeShareTable type_share_by_degree(const BipartiteGraph& graph,
                                    std::span<const std::int64_t> thresholds) {
  require_vertices(graph);
  TypeShareTable table;
  for (const auto threshold : thresholds) {
    std::vector<Asn> selected;
    for (const auto& [asn, node] : graph.ases()) {
      if (threshold <= 0 || static_cast<std::int64_t>(graph.degree(asn)) > threshold) {
        selected.push_back(asn);
      }
    }
    TypeShareRow row;
    row.threshold = threshold;
    row.label = threshold <= 0 ? "All ASes" : "ASes with degree >" + std::to_string(threshold);
    row.as_count = selected.size();
    row.shares = type_shares(graph, selected);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::int32_t> bfs_distances(const GraphIndex& index, GraphIndex::Vertex source) {
  std::vector<std::int32_t> distance(index.vertex_count(), -1);
  std::vector<GraphIndex::Vertex> frontier{source};
  std::vector<GraphIndex::Vertex> next;
  distance[source] = 0;
  for (std::int32_t depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (const auto v : frontier) {
      for (const auto w : index.neighbors(v)) {
        if (distance[w] < 0) {
          distance[w] = depth;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return distance;
}

Distribution shortest_path_ixp_counts(const BipartiteGraph& graph, PathOptions options) {
  require_vertices(graph);
  const GraphIndex index(graph);
  const std::size_t as_count = index.as_count();

  std::vector<std::size_t> sources(as_count);
  std::iota(sources.begin(), sources.end(), 0);
  if (options.sample_size && *options.sample_size < as_count) {
    std::vector<std::size_t> sample;
    sample.reserve(*options.sample_size);
    std::mt19937_64 rng(options.seed);
    std::sample(sources.begin(), sources.end(), std::back_inserter(sample),
                static_cast<std::ptrdiff_t>(*options.sample_size), rng);
    sources = std::move(sample);
  }
  std::vector<bool> sampled(as_count, false);
  for (const auto s : sources) sampled[s] = true;

  std::vector<Histogram> partial(detail::resolve_threads(options.threads));
  detail::parallel_for(sources.size(), options.threads, [&](unsigned worker, std::size_t i) {
    const std::size_t source = sources[i];
    const auto distance = bfs_distances(index, index.as_vertex(source));
    auto& histogram = partial[worker];
    for (std::size_t target = 0; target < as_count; ++target) {
      // A pair with two sampled endpoints is counted from its smaller end.
      if (target == source || (sampled[target] && target < source)) continue;
      const auto d = distance[index.as_vertex(target)];
      if (d < 0) {
        throw Error(ErrorCode::kDisconnected, "AS" + to_string(index.asn(index.as_vertex(source))) +
                                                  " cannot reach AS" +
                                                  to_string(index.asn(index.as_vertex(target))));
      }
      ++histogram[d / 2];
    }
  });
  return Distribution::from_histogram(merge(partial));
}

std::size_t remote_peering_gain(const BipartiteGraph& graph, Asn a, Asn b) {
  const auto& ixps_a = graph.memberships(a);
  const auto& ixps_b = graph.memberships(b);
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "remote peering gain needs two ASes");
  const bool colocated = std::any_of(ixps_b.begin(), ixps_b.end(),
                                     [&](const IxpId& id) { return ixps_a.contains(id); });
  if (!colocated) {
    throw Error(ErrorCode::kNotColocated,
                "AS" + to_string(a) + " and AS" + to_string(b) + " share no IXP");
  }

  std::set<Asn> reach_a;
  for (const auto& id : ixps_a) {
    const auto& members = graph.members(id);
    reach_a.insert(members.begin(), members.end());
  }
  std::set<Asn> gained;
  for (const auto& id : ixps_b) {
    for (const Asn member : graph.members(id)) {
      if (member != a && member != b && !reach_a.contains(member)) gained.insert(member);
    }
  }
  return gained.size();
}

Distribution remote_peering_gain_cdf(const BipartiteGraph& graph, unsigned threads) {
  if (graph.empty()) return {};
  const GraphIndex index(graph);
  const std::size_t n = index.as_count();
  const std::size_t words = (n + 63) / 64;

  // reach[a] = every AS sharing an IXP with a, a itself included. For a
  // co-located pair both a and b lie in reach[a] and reach[b], so the plain
  // set difference already leaves them out.
  std::vector<std::uint64_t> reach(n * words, 0);
  for (std::size_t a = 0; a < n; ++a) {
    auto* row = reach.data() + a * words;
    for (const auto ixp : index.neighbors(index.as_vertex(a))) {
      for (const auto member : index.neighbors(ixp)) {
        const std::size_t rank = member - index.ixp_count();
        row[rank / 64] |= std::uint64_t{1} << (rank % 64);
      }
    }
  }

  std::vector<Histogram> partial(detail::resolve_threads(threads));
  detail::parallel_for(n, threads, [&](unsigned worker, std::size_t a) {
    const auto* row_a = reach.data() + a * words;
    auto& histogram = partial[worker];
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = row_a[w]; bits != 0; bits &= bits - 1) {
        const std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (b == a) continue;
        const auto* row_b = reach.data() + b * words;
        std::int64_t gain = 0;
        for (std::size_t k = 0; k < words; ++k) gain += std::popcount(row_b[k] & ~row_a[k]);
        ++histogram[gain];
      }
    }
  });
  return Distribution::from_histogram(merge(partial));
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::kInvalidArgument, "length mismatch");
  if (x.size() < 2) throw Error(ErrorCode::kInsufficientData, "fewer than two points");
  const auto n = static_cast<double>(x.size());
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kInsufficientData, "a variable is constant");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double degree_prefix_correlation(const BipartiteGraph& graph) {
  std::vector<double> degrees;
  std::vector<double> prefixes;
  for (const auto& [asn, node] : graph.ases()) {
    if (!node.prefix_count) continue;
    degrees.push_back(static_cast<double>(graph.degree(asn)));
    prefixes.push_back(static_cast<double>(*node.prefix_count));
  }
  return pearson(degrees, prefixes);
}

std::vector<double> betweenness_centrality(const std::vector<std::vector<std::uint32_t>>& adjacency,
                                           unsigned threads) {
  const std::size_t n = adjacency.size();
  std::vector<std::vector<double>> partial(detail::resolve_threads(threads),
                                           std::vector<double>(n, 0.0));

  // Brandes' accumulation, one BFS per source.
  detail::parallel_for(n, threads, [&](unsigned worker, std::size_t source) {
    std::vector<std::int64_t> distance(n, -1);
    std::vector<double> paths(n, 0.0);
    std::vector<double> dependency(n, 0.0);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(source)};
    distance[source] = 0;
    paths[source] = 1.0;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (const auto w : adjacency[v]) {
        if (distance[w] < 0) {
          distance[w] = distance[v] + 1;
          queue.push_back(w);
        }
        if (distance[w] == distance[v] + 1) paths[w] += paths[v];
      }
    }
    auto& score = partial[worker];
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = *it;
      for (const auto v : adjacency[w]) {
        if (distance[v] == distance[w] - 1) {
          dependency[v] += paths[v] / paths[w] * (1.0 + dependency[w]);
        }
      }
      if (w != source) score[w] += dependency[w];
    }
  });

  std::vector<double> out(n, 0.0);
  if (n < 3) return out;
  // Each unordered pair was accumulated from both of its ends, which cancels
  // the factor 2 of the (n-1)(n-2)/2 normalisation.
  const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (const auto& part : partial) {
    for (std::size_t v = 0; v < n; ++v) out[v] += part[v];
  }
  for (auto& value : out) value *= scale;
  return out;
}

std::vector<double> clustering_coefficient(const std::vector<std::vector<std::uint32_t>>& adjacency) {
  std::vector<double> out(adjacency.size(), 0.0);
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    const auto& nv = adjacency[v];
    const std::size_t k = nv.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (const auto u : nv) {
      const auto& nu = adjacency[u];
      std::vector<std::uint32_t> common;
      std::set_intersection(nv.begin(), nv.end(), nu.begin(), nu.end(),
                            std::back_inserter(common));
      links += common.size();
    }
    // Each neighbour link was counted from both of its ends.
    out[v] = static_cast<double>(links) / static_cast<double>(k * (k - 1));
  }
  return out;
}

}  // namespace ixpgraph
