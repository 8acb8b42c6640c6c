#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ixpgraph/ip.hpp"

namespace ixpgraph {

// Autonomous System number. Always positive in a valid graph.
struct Asn {
  std::uint32_t value = 0;

  friend auto operator<=>(const Asn&, const Asn&) = default;
};

// Accepts "64500", "AS64500" and the short fixture form "A1".
std::optional<Asn> parse_asn(std::string_view text);
inline std::string to_string(Asn asn) { return std::to_string(asn.value); }

using IxpId = std::string;

enum class NodeClass { kIxp, kAs };
enum class AsType { kContent, kEnterprise, kIsp, kUnknown };
enum class IxpStatus { kActive, kInactive, kNotApproved };
enum class Source { kPdb, kPch, kOther };

std::string_view to_string(NodeClass value);
std::string_view to_string(AsType value);
std::string_view to_string(IxpStatus value);
std::string_view to_string(Source value);

std::optional<NodeClass> parse_node_class(std::string_view text);
// Understands the common CAIDA labels as well ("Transit/Access" is an ISP).
std::optional<AsType> parse_as_type(std::string_view text);
std::optional<IxpStatus> parse_ixp_status(std::string_view text);
std::optional<Source> parse_source(std::string_view text);

struct Location {
  std::string country;
  std::string city;
  std::optional<double> lat;
  std::optional<double> lon;

  friend bool operator==(const Location&, const Location&) = default;
};

struct AsNode {
  Asn asn;
  AsType type = AsType::kUnknown;
  // Total announced prefixes. Equals prefixes->size() whenever prefixes is set.
  std::optional<std::uint64_t> prefix_count;
  std::optional<std::vector<std::string>> prefixes;
};

struct IxpNode {
  IxpId id;
  std::vector<std::string> names;
  std::vector<Cidr> peering_prefixes;
  std::optional<Location> location;
  IxpStatus status = IxpStatus::kActive;
};

struct MembershipEdge {
  IxpId ixp;
  Asn asn;
  std::optional<IpAddress> member_ip;
  std::set<Source> sources;
};

// IXP bipartite graph. IXPs and ASes live in separate key spaces, so an edge
// can only ever join one IXP to one AS. At most one edge per (IXP, AS) pair.
class BipartiteGraph {
 public:
  using EdgeKey = std::pair<IxpId, Asn>;

  // Throws kInvalidArgument on a duplicate id or a node violating its
  // invariants. Peering prefixes are sorted and deduplicated.
  void add_ixp(IxpNode node);
  void add_as(AsNode node);

  // Throws kUnknownEndpoint if either endpoint is missing. Re-adding an
  // existing pair merges the source sets and fills in a missing member_ip.
  void add_membership(MembershipEdge edge);

  void set_as_type(Asn asn, AsType type);
  void set_as_prefixes(Asn asn, std::vector<std::string> prefixes);
  // Throws kInvalidArgument if the AS already lists a different number of prefixes.
  void set_as_prefix_count(Asn asn, std::uint64_t count);
  void set_ixp_location(const IxpId& id, Location location);

  bool has_ixp(const IxpId& id) const { return ixps_.contains(id); }
  bool has_as(Asn asn) const { return ases_.contains(asn); }

  // Lookups below throw kUnknownNode for absent ids.
  const IxpNode& ixp(const IxpId& id) const;
  const AsNode& as_node(Asn asn) const;
  const std::set<Asn>& members(const IxpId& id) const;
  const std::set<IxpId>& memberships(Asn asn) const;
  std::size_t degree(const IxpId& id) const { return members(id).size(); }
  std::size_t degree(Asn asn) const { return memberships(asn).size(); }

  const std::map<IxpId, IxpNode>& ixps() const { return ixps_; }
  const std::map<Asn, AsNode>& ases() const { return ases_; }
  const std::map<EdgeKey, MembershipEdge>& edges() const { return edges_; }

  std::size_t vertex_count() const { return ixps_.size() + ases_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertex_count() == 0; }

  // Subgraph induced by the given vertex sets; ids not in the graph are ignored.
  BipartiteGraph induced(const std::set<IxpId>& ixps, const std::set<Asn>& ases) const;

 private:
  std::map<IxpId, IxpNode> ixps_;
  std::map<Asn, AsNode> ases_;
  std::map<EdgeKey, MembershipEdge> edges_;
  std::map<IxpId, std::set<Asn>> members_;
  std::map<Asn, std::set<IxpId>> memberships_;
};

// Dense, read-only adjacency view of a BipartiteGraph for traversals.
// Vertices [0, ixp_count) are IXPs in id order; the rest are ASes in ASN order.
class GraphIndex {
 public:
  using Vertex = std::uint32_t;

  explicit GraphIndex(const BipartiteGraph& graph);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t ixp_count() const { return ixp_ids_.size(); }
  std::size_t as_count() const { return asns_.size(); }

  bool is_ixp(Vertex v) const { return v < ixp_ids_.size(); }
  Vertex as_vertex(std::size_t as_rank) const {
    return static_cast<Vertex>(ixp_ids_.size() + as_rank);
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  const IxpId& ixp_id(Vertex v) const { return ixp_ids_[v]; }
  Asn asn(Vertex v) const { return asns_[v - ixp_ids_.size()]; }

  std::optional<Vertex> find(const IxpId& id) const;
  std::optional<Vertex> find(Asn asn) const;

 private:
  std::vector<IxpId> ixp_ids_;
  std::vector<Asn> asns_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

struct ComponentSelection {
  BipartiteGraph graph;
  std::size_t nodes_discarded = 0;
  std::size_t edges_discarded = 0;
};

// Largest connected component by vertex count. Ties go to the component with
// more edges, then to the one holding the smallest node id (IXP ids order
// before ASNs). Throws kEmptyGraph on a graph without vertices.
ComponentSelection giant_component(const BipartiteGraph& graph);

// Relationship between two ASes as seen from the first AS of the query.
enum class Relation { kPeerToPeer, kCustomerToProvider, kProviderToCustomer, kUnknown };

std::string_view to_string(Relation value);
std::optional<Relation> parse_relation(std::string_view text);

// Peering-policy layer. One entry per unordered AS pair; the stored relation
// is oriented from the smaller ASN and flipped on lookup when needed.
class PolicyLayer {
 public:
  void set(Asn a, Asn b, Relation relation);
  // Relation of `a` towards `b`; nullopt when the pair has no entry.
  std::optional<Relation> get(Asn a, Asn b) const;
  std::size_t size() const { return relations_.size(); }

 private:
  std::map<std::pair<Asn, Asn>, Relation> relations_;
};

}  // namespace ixpgraph
