#pragma once

#include <cstddef>
#include <variant>

#include "ixpgraph/model.hpp"
#include "ixpgraph/multigraph.hpp"

namespace ixpgraph {

using AnyMultigraph = std::variant<IxpMultigraph, AsMultigraph>;

// IXP multigraph: one (i, j, via=k) edge for every AS k that is a member of
// both IXPs i and j. Every IXP appears as a node, isolated or not.
// Throws kEmptyGraph on a graph without vertices.
IxpMultigraph project_ixps(const BipartiteGraph& graph);

// AS multigraph: one (a, b, via=i) edge for every IXP i where both are members.
AsMultigraph project_ases(const BipartiteGraph& graph);

AnyMultigraph project(const BipartiteGraph& graph, NodeClass node_class);

NodeClass node_class_of(const AnyMultigraph& mg);

struct PolicyOptions {
  // Keep pairs whose relation is Unknown or missing instead of dropping them.
  bool keep_unknown = false;
};

struct PolicyFilterResult {
  AsMultigraph graph;
  std::size_t dropped_edges = 0;
};

// Keeps only the parallel edges of AS pairs with a p2p, c2p or p2c relation.
PolicyFilterResult apply_policy(const AsMultigraph& mg, const PolicyLayer& policy,
                                PolicyOptions options = {});
// Throws kWrongNodeClass when handed an IXP multigraph.
PolicyFilterResult apply_policy(const AnyMultigraph& mg, const PolicyLayer& policy,
                                PolicyOptions options = {});

}  // namespace ixpgraph
