#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "ixpgraph/error.hpp"
#include "ixpgraph/model.hpp"

namespace ixpgraph {

// Projection of a BipartiteGraph onto one vertex class. Every parallel edge
// carries the id of the shared neighbour from the other class ("via"), so the
// multiplicity of a pair is the number of distinct via labels on it.
//
// Storage is a sorted array of index triples (u < v), which keeps the AS
// projection of a full-scale graph to a few tens of megabytes.
template <typename Node, typename Via, NodeClass kClass>
class Multigraph {
 public:
  using Index = std::uint32_t;

  struct Edge {
    Node u;
    Node v;
    Via via;
  };

  struct IndexedEdge {
    Index u;
    Index v;
    Index via;

    friend auto operator<=>(const IndexedEdge&, const IndexedEdge&) = default;
  };

  static constexpr NodeClass node_class() { return kClass; }

  Multigraph() = default;

  // `nodes` and `via_labels` must be sorted and unique; edges refer to them
  // by position. Self loops are rejected, endpoints are canonicalised to
  // u < v and duplicate (u, v, via) triples collapse.
  Multigraph(std::vector<Node> nodes, std::vector<Via> via_labels,
             std::vector<IndexedEdge> edges)
      : nodes_(std::move(nodes)), via_labels_(std::move(via_labels)), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.u == e.v) throw Error(ErrorCode::kInvalidArgument, "multigraph self loop");
      if (e.u >= nodes_.size() || e.v >= nodes_.size() || e.via >= via_labels_.size()) {
        throw Error(ErrorCode::kInvalidArgument, "multigraph edge out of range");
      }
      if (e.v < e.u) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Via>& via_labels() const { return via_labels_; }
  const std::vector<IndexedEdge>& indexed_edges() const { return edges_; }

  std::size_t node_count() const { return nodes_.size(); }
  // Total number of parallel edges.
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<Index> find(const Node& node) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
    if (it == nodes_.end() || *it != node) return std::nullopt;
    return static_cast<Index>(it - nodes_.begin());
  }

  bool contains(const Node& node) const { return find(node).has_value(); }

  // Throws kUnknownNode if either endpoint is absent; a node with itself is 0.
  std::size_t multiplicity(const Node& u, const Node& v) const {
    auto [first, last] = pair_range(require(u), require(v));
    return static_cast<std::size_t>(last - first);
  }

  std::vector<Via> via(const Node& u, const Node& v) const {
    auto [first, last] = pair_range(require(u), require(v));
    std::vector<Via> out;
    for (auto it = first; it != last; ++it) out.push_back(via_labels_[it->via]);
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
      out.push_back({nodes_[e.u], nodes_[e.v], via_labels_[e.via]});
    }
    return out;
  }

  // Calls fn(u_index, v_index, multiplicity) once per adjacent pair, u < v.
  template <typename Fn>
  void for_each_pair(Fn&& fn) const {
    std::size_t i = 0;
    while (i < edges_.size()) {
      std::size_t j = i;
      while (j < edges_.size() && edges_[j].u == edges_[i].u && edges_[j].v == edges_[i].v) ++j;
      fn(edges_[i].u, edges_[i].v, j - i);
      i = j;
    }
  }

  std::size_t pair_count() const {
    std::size_t count = 0;
    for_each_pair([&](Index, Index, std::size_t) { ++count; });
    return count;
  }

  // Multiplicities collapsed to simple edges; neighbour lists are sorted.
  std::vector<std::vector<Index>> simple_adjacency() const {
    std::vector<std::vector<Index>> adjacency(nodes_.size());
    for_each_pair([&](Index u, Index v, std::size_t) {
      adjacency[u].push_back(v);
      adjacency[v].push_back(u);
    });
    for (auto& list : adjacency) std::sort(list.begin(), list.end());
    return adjacency;
  }

 private:
  Index require(const Node& node) const {
    auto index = find(node);
    if (!index) throw Error(ErrorCode::kUnknownNode, "node not in multigraph");
    return *index;
  }

  auto pair_range(Index u, Index v) const {
    if (v < u) std::swap(u, v);
    const auto key = [](const IndexedEdge& e) { return std::make_tuple(e.u, e.v); };
    return std::equal_range(
        edges_.begin(), edges_.end(), IndexedEdge{u, v, 0},
        [&](const IndexedEdge& a, const IndexedEdge& b) { return key(a) < key(b); });
  }

  std::vector<Node> nodes_;
  std::vector<Via> via_labels_;
  std::vector<IndexedEdge> edges_;
};

using IxpMultigraph = Multigraph<IxpId, Asn, NodeClass::kIxp>;
using AsMultigraph = Multigraph<Asn, IxpId, NodeClass::kAs>;

}  // namespace ixpgraph
