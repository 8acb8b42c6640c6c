#include "ixpgraph/projection.hpp"

#include "ixpgraph/error.hpp"

namespace ixpgraph {
namespace {

void require_vertices(const BipartiteGraph& graph) {
  if (graph.empty()) throw Error(ErrorCode::kEmptyGraph, "cannot project an empty graph");
}

}  // namespace

IxpMultigraph project_ixps(const BipartiteGraph& graph) {
  require_vertices(graph);
  const GraphIndex index(graph);

  std::vector<IxpId> nodes;
  nodes.reserve(index.ixp_count());
  for (const auto& [id, node] : graph.ixps()) nodes.push_back(id);
  std::vector<Asn> vias;
  vias.reserve(index.as_count());
  for (const auto& [asn, node] : graph.ases()) vias.push_back(asn);

  // IXP vertex ids coincide with IXP ranks in the index.
  std::vector<IxpMultigraph::IndexedEdge> edges;
  for (std::size_t rank = 0; rank < index.as_count(); ++rank) {
    const auto ixps = index.neighbors(index.as_vertex(rank));
    for (std::size_t i = 0; i < ixps.size(); ++i) {
      for (std::size_t j = i + 1; j < ixps.size(); ++j) {
        edges.push_back({ixps[i], ixps[j], static_cast<IxpMultigraph::Index>(rank)});
      }
    }
  }
  return IxpMultigraph(std::move(nodes), std::move(vias), std::move(edges));
}

AsMultigraph project_ases(const BipartiteGraph& graph) {
  require_vertices(graph);
  const GraphIndex index(graph);
  const auto offset = static_cast<AsMultigraph::Index>(index.ixp_count());

  std::vector<Asn> nodes;
  nodes.reserve(index.as_count());
  for (const auto& [asn, node] : graph.ases()) nodes.push_back(asn);
  std::vector<IxpId> vias;
  vias.reserve(index.ixp_count());
  for (const auto& [id, node] : graph.ixps()) vias.push_back(id);

  std::vector<AsMultigraph::IndexedEdge> edges;
  for (GraphIndex::Vertex ixp = 0; ixp < index.ixp_count(); ++ixp) {
    const auto members = index.neighbors(ixp);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        edges.push_back({members[i] - offset, members[j] - offset, ixp});
      }
    }
  }
  return AsMultigraph(std::move(nodes), std::move(vias), std::move(edges));
}

AnyMultigraph project(const BipartiteGraph& graph, NodeClass node_class) {
  if (node_class == NodeClass::kIxp) return project_ixps(graph);
  return project_ases(graph);
}

NodeClass node_class_of(const AnyMultigraph& mg) {
  return std::visit([](const auto& g) { return g.node_class(); }, mg);
}

PolicyFilterResult apply_policy(const AsMultigraph& mg, const PolicyLayer& policy,
                                PolicyOptions options) {
  std::vector<AsMultigraph::IndexedEdge> kept;
  std::size_t dropped = 0;
  const auto& nodes = mg.nodes();
  for (const auto& edge : mg.indexed_edges()) {
    const auto relation = policy.get(nodes[edge.u], nodes[edge.v]);
    const bool known = relation && *relation != Relation::kUnknown;
    if (known || options.keep_unknown) {
      kept.push_back(edge);
    } else {
      ++dropped;
    }
  }
  return {AsMultigraph(mg.nodes(), mg.via_labels(), std::move(kept)), dropped};
}

PolicyFilterResult apply_policy(const AnyMultigraph& mg, const PolicyLayer& policy,
                                PolicyOptions options) {
  const auto* as_graph = std::get_if<AsMultigraph>(&mg);
  if (as_graph == nullptr) {
    throw Error(ErrorCode::kWrongNodeClass, "policy layers apply to the AS multigraph only");
  }
  return apply_policy(*as_graph, policy, options);
}

}  // namespace ixpgraph
