#include "ixpgraph/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <tuple>

#include "ixpgraph/csv.hpp"
#include "ixpgraph/error.hpp"

namespace ixpgraph {
namespace {

std::string fold_key(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (unsigned char c : text) {
    if (c == ' ' || c == '-' || c == '_') continue;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

template <typename Map, typename Key>
auto& lookup(Map& map, const Key& key, const char* what) {
  auto it = map.find(key);
  if (it == map.end()) {
    if constexpr (std::is_same_v<Key, Asn>) {
      throw Error(ErrorCode::kUnknownNode, std::string(what) + " AS" + to_string(key));
    } else {
      throw Error(ErrorCode::kUnknownNode, std::string(what) + " " + key);
    }
  }
  return it->second;
}

}  // namespace

std::optional<Asn> parse_asn(std::string_view text) {
  if (text.size() >= 2 && (text[0] == 'A' || text[0] == 'a') &&
      (text[1] == 'S' || text[1] == 's')) {
    text.remove_prefix(2);
  } else if (!text.empty() && (text[0] == 'A' || text[0] == 'a')) {
    text.remove_prefix(1);
  }
  std::uint32_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || value == 0) return std::nullopt;
  return Asn{value};
}

std::string_view to_string(NodeClass value) {
  return value == NodeClass::kIxp ? "ixp" : "as";
}

std::string_view to_string(AsType value) {
  switch (value) {
    case AsType::kContent: return "Content";
    case AsType::kEnterprise: return "Enterprise";
    case AsType::kIsp: return "ISP";
    case AsType::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(IxpStatus value) {
  switch (value) {
    case IxpStatus::kActive: return "Active";
    case IxpStatus::kInactive: return "Inactive";
    case IxpStatus::kNotApproved: return "NotApproved";
  }
  return "Active";
}

std::string_view to_string(Source value) {
  switch (value) {
    case Source::kPdb: return "PDB";
    case Source::kPch: return "PCH";
    case Source::kOther: return "Other";
  }
  return "Other";
}

std::string_view to_string(Relation value) {
  switch (value) {
    case Relation::kPeerToPeer: return "p2p";
    case Relation::kCustomerToProvider: return "c2p";
    case Relation::kProviderToCustomer: return "p2c";
    case Relation::kUnknown: return "unknown";
  }
  return "unknown";
}

std::optional<NodeClass> parse_node_class(std::string_view text) {
  const auto key = fold_key(text);
  if (key == "ixp" || key == "ixps") return NodeClass::kIxp;
  if (key == "as" || key == "ases") return NodeClass::kAs;
  return std::nullopt;
}

std::optional<AsType> parse_as_type(std::string_view text) {
  const auto key = fold_key(text);
  if (key == "content" || key == "cdn") return AsType::kContent;
  if (key == "enterprise") return AsType::kEnterprise;
  if (key == "isp" || key == "transit/access" || key == "transit" || key == "access") {
    return AsType::kIsp;
  }
  if (key == "unknown" || key.empty()) return AsType::kUnknown;
  return std::nullopt;
}

std::optional<IxpStatus> parse_ixp_status(std::string_view text) {
  const auto key = fold_key(text);
  if (key == "active" || key == "ok") return IxpStatus::kActive;
  if (key == "inactive") return IxpStatus::kInactive;
  if (key == "notapproved" || key == "pending") return IxpStatus::kNotApproved;
  return std::nullopt;
}

std::optional<Source> parse_source(std::string_view text) {
  const auto key = fold_key(text);
  if (key == "pdb" || key == "peeringdb") return Source::kPdb;
  if (key == "pch") return Source::kPch;
  if (key == "other") return Source::kOther;
  return std::nullopt;
}

std::optional<Relation> parse_relation(std::string_view text) {
  // CAIDA serial codes are matched before folding, which would strip the '-'.
  const auto raw = csv::trim(text);
  if (raw == "0") return Relation::kPeerToPeer;
  if (raw == "-1") return Relation::kProviderToCustomer;
  const auto key = fold_key(text);
  if (key == "p2p" || key == "peertopeer") return Relation::kPeerToPeer;
  if (key == "c2p" || key == "customertoprovider") return Relation::kCustomerToProvider;
  if (key == "p2c" || key == "providertocustomer") {
    return Relation::kProviderToCustomer;
  }
  if (key == "unknown") return Relation::kUnknown;
  return std::nullopt;
}

void BipartiteGraph::add_ixp(IxpNode node) {
  if (node.id.empty()) throw Error(ErrorCode::kInvalidArgument, "IXP id is empty");
  if (node.names.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "IXP " + node.id + " has no name");
  }
  if (ixps_.contains(node.id)) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate IXP " + node.id);
  }
  auto& prefixes = node.peering_prefixes;
  std::sort(prefixes.begin(), prefixes.end());
  prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
  members_[node.id];
  auto id = node.id;
  ixps_.emplace(std::move(id), std::move(node));
}

void BipartiteGraph::add_as(AsNode node) {
  if (node.asn.value == 0) throw Error(ErrorCode::kInvalidArgument, "ASN must be positive");
  if (ases_.contains(node.asn)) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate AS" + to_string(node.asn));
  }
  if (node.prefixes && node.prefix_count != node.prefixes->size()) {
    if (node.prefix_count) {
      throw Error(ErrorCode::kInvalidArgument,
                  "prefix_count disagrees with prefixes for AS" + to_string(node.asn));
    }
    node.prefix_count = node.prefixes->size();
  }
  memberships_[node.asn];
  ases_.emplace(node.asn, std::move(node));
}

void BipartiteGraph::add_membership(MembershipEdge edge) {
  if (!ixps_.contains(edge.ixp)) {
    throw Error(ErrorCode::kUnknownEndpoint, "IXP " + edge.ixp);
  }
  if (!ases_.contains(edge.asn)) {
    throw Error(ErrorCode::kUnknownEndpoint, "AS" + to_string(edge.asn));
  }
  if (edge.sources.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "membership without a source");
  }
  EdgeKey key{edge.ixp, edge.asn};
  auto it = edges_.find(key);
  if (it != edges_.end()) {
    it->second.sources.insert(edge.sources.begin(), edge.sources.end());
    if (!it->second.member_ip) it->second.member_ip = edge.member_ip;
    return;
  }
  members_[edge.ixp].insert(edge.asn);
  memberships_[edge.asn].insert(edge.ixp);
  edges_.emplace(std::move(key), std::move(edge));
}

void BipartiteGraph::set_as_type(Asn asn, AsType type) {
  lookup(ases_, asn, "unknown").type = type;
}

void BipartiteGraph::set_as_prefixes(Asn asn, std::vector<std::string> prefixes) {
  auto& node = lookup(ases_, asn, "unknown");
  node.prefix_count = prefixes.size();
  node.prefixes = std::move(prefixes);
}

void BipartiteGraph::set_as_prefix_count(Asn asn, std::uint64_t count) {
  auto& node = lookup(ases_, asn, "unknown");
  if (node.prefixes && node.prefixes->size() != count) {
    throw Error(ErrorCode::kInvalidArgument,
                "prefix_count disagrees with prefixes for AS" + to_string(asn));
  }
  node.prefix_count = count;
}

void BipartiteGraph::set_ixp_location(const IxpId& id, Location location) {
  lookup(ixps_, id, "unknown").location = std::move(location);
}

const IxpNode& BipartiteGraph::ixp(const IxpId& id) const {
  return lookup(ixps_, id, "unknown");
}

const AsNode& BipartiteGraph::as_node(Asn asn) const {
  return lookup(ases_, asn, "unknown");
}

const std::set<Asn>& BipartiteGraph::members(const IxpId& id) const {
  return lookup(members_, id, "unknown");
}

const std::set<IxpId>& BipartiteGraph::memberships(Asn asn) const {
  return lookup(memberships_, asn, "unknown");
}

BipartiteGraph BipartiteGraph::induced(const std::set<IxpId>& ixps,
                                       const std::set<Asn>& ases) const {
  BipartiteGraph out;
  for (const auto& id : ixps) {
    if (auto it = ixps_.find(id); it != ixps_.end()) out.add_ixp(it->second);
  }
  for (const auto asn : ases) {
    if (auto it = ases_.find(asn); it != ases_.end()) out.add_as(it->second);
  }
  for (const auto& [key, edge] : edges_) {
    if (out.has_ixp(key.first) && out.has_as(key.second)) out.add_membership(edge);
  }
  return out;
}

GraphIndex::GraphIndex(const BipartiteGraph& graph) {
  ixp_ids_.reserve(graph.ixps().size());
  for (const auto& [id, node] : graph.ixps()) ixp_ids_.push_back(id);
  asns_.reserve(graph.ases().size());
  for (const auto& [asn, node] : graph.ases()) asns_.push_back(asn);

  const std::size_t n = ixp_ids_.size() + asns_.size();
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(graph.edge_count());
  for (const auto& [key, edge] : graph.edges()) {
    const Vertex ixp = *find(key.first);
    const Vertex as = *find(key.second);
    arcs.emplace_back(ixp, as);
    ++degree[ixp];
    ++degree[as];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [ixp, as] : arcs) {
    targets_[cursor[ixp]++] = as;
    targets_[cursor[as]++] = ixp;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::optional<GraphIndex::Vertex> GraphIndex::find(const IxpId& id) const {
  auto it = std::lower_bound(ixp_ids_.begin(), ixp_ids_.end(), id);
  if (it == ixp_ids_.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ixp_ids_.begin());
}

std::optional<GraphIndex::Vertex> GraphIndex::find(Asn asn) const {
  auto it = std::lower_bound(asns_.begin(), asns_.end(), asn);
  if (it == asns_.end() || *it != asn) return std::nullopt;
  return as_vertex(static_cast<std::size_t>(it - asns_.begin()));
}

ComponentSelection giant_component(const BipartiteGraph& graph) {
  if (graph.empty()) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");

  const GraphIndex index(graph);
  const std::size_t n = index.vertex_count();
  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> component(n, kUnseen);

  struct Candidate {
    std::uint32_t id = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    GraphIndex::Vertex first = 0;  // smallest vertex; index order is id order
  };
  std::optional<Candidate> best;

  std::deque<GraphIndex::Vertex> queue;
  std::uint32_t next_id = 0;
  // Vertices are visited in index order, so each component's seed is its
  // smallest vertex.
  for (GraphIndex::Vertex seed = 0; seed < n; ++seed) {
    if (component[seed] != kUnseen) continue;
    Candidate current{next_id++, 0, 0, seed};
    component[seed] = current.id;
    queue.push_back(seed);
    std::size_t degree_sum = 0;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      ++current.vertices;
      degree_sum += index.neighbors(v).size();
      for (const auto w : index.neighbors(v)) {
        if (component[w] == kUnseen) {
          component[w] = current.id;
          queue.push_back(w);
        }
      }
    }
    current.edges = degree_sum / 2;
    const auto key = [](const Candidate& c) {
      return std::make_tuple(c.vertices, c.edges, -static_cast<std::int64_t>(c.first));
    };
    if (!best || key(current) > key(*best)) best = current;
  }

  std::set<IxpId> ixps;
  std::set<Asn> ases;
  for (GraphIndex::Vertex v = 0; v < n; ++v) {
    if (component[v] != best->id) continue;
    if (index.is_ixp(v)) {
      ixps.insert(index.ixp_id(v));
    } else {
      ases.insert(index.asn(v));
    }
  }
  ComponentSelection result{graph.induced(ixps, ases)};
  result.nodes_discarded = graph.vertex_count() - result.graph.vertex_count();
  result.edges_discarded = graph.edge_count() - result.graph.edge_count();
  return result;
}

void PolicyLayer::set(Asn a, Asn b, Relation relation) {
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "policy on a self pair");
  if (b < a) {
    std::swap(a, b);
    if (relation == Relation::kCustomerToProvider) {
      relation = Relation::kProviderToCustomer;
    } else if (relation == Relation::kProviderToCustomer) {
      relation = Relation::kCustomerToProvider;
    }
  }
  relations_[{a, b}] = relation;
}

std::optional<Relation> PolicyLayer::get(Asn a, Asn b) const {
  const bool flipped = b < a;
  auto it = relations_.find(flipped ? std::make_pair(b, a) : std::make_pair(a, b));
  if (it == relations_.end()) return std::nullopt;
  if (!flipped) return it->second;
  switch (it->second) {
    case Relation::kCustomerToProvider: return Relation::kProviderToCustomer;
    case Relation::kProviderToCustomer: return Relation::kCustomerToProvider;
    default: return it->second;
  }
}

}  // namespace ixpgraph
