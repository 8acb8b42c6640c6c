#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ixpgraph/ip.hpp"
#include "ixpgraph/model.hpp"

namespace ixpgraph {

// Header every membership dataset must start with.
inline constexpr std::string_view kMembershipHeader =
    "source,ixp_key,ixp_name,ixp_prefixes,asn,member_ip,status,as_type,as_prefix_count";

// One row of a PDB or PCH membership export.
struct MembershipRecord {
  Source source = Source::kPdb;
  std::string ixp_key;
  std::string ixp_name;
  std::vector<Cidr> ixp_prefixes;
  Asn asn;
  std::optional<IpAddress> member_ip;
  IxpStatus status = IxpStatus::kActive;
  std::optional<AsType> as_type;
  std::optional<std::uint64_t> as_prefix_count;

  // "PDB:<ixp_key>", unique across both datasets.
  std::string source_key() const;
};

struct Dataset {
  Source source = Source::kPdb;
  std::vector<MembershipRecord> records;
  std::size_t parse_errors = 0;
  std::vector<std::string> diagnostics;  // one per rejected row
};

// Malformed rows are counted in parse_errors and skipped. Throws kIoError if
// the file cannot be read and kFormatError if the header is not recognised.
// An empty `source` column inherits `kind`; a row naming the other source is
// rejected.
Dataset parse_dataset(const std::filesystem::path& path, Source kind);
Dataset parse_dataset(std::istream& in, Source kind);

// Lowercase, trim, and collapse runs of whitespace and '-', '_', '.', ','
// into a single space.
std::string normalize_ixp_name(std::string_view name);

struct MergedIxp {
  IxpId id;
  std::vector<std::string> source_keys;  // sorted
  std::vector<std::string> names;        // sorted, distinct raw names
  std::vector<Cidr> prefixes;            // sorted, distinct
  IxpStatus status = IxpStatus::kActive;
};

struct IxpMerge {
  std::map<IxpId, MergedIxp> ixps;
  std::map<std::string, IxpId> by_source_key;

  const MergedIxp& resolve(const MembershipRecord& record) const;
};

// Unifies source-local IXPs that share a prefix (equal or nested) or a
// normalised name, closed transitively. Unified ids are "IXP" followed by a
// zero-padded sequence number, assigned in order of each group's smallest
// source key. A group is Active only if every row of every member says so;
// otherwise NotApproved wins over Inactive.
IxpMerge merge_ixp_lists(std::span<const MembershipRecord> pdb,
                         std::span<const MembershipRecord> pch);

enum class DiscardReason {
  kInactiveIxp,
  kIpInconsistent,
  kNotInGiantComponent,
  kDuplicateCollapsed,
  kParseError,
};

std::string_view to_string(DiscardReason reason);

struct DiscardCounts {
  std::size_t nodes = 0;
  std::size_t edges = 0;

  friend bool operator==(const DiscardCounts&, const DiscardCounts&) = default;
};

// Per-stage bookkeeping of the sanitisation pipeline. Every raw row counts
// as one pre-pipeline edge; pre-pipeline nodes are the unified IXPs plus the
// distinct ASNs seen in parsed rows.
struct DiscardReport {
  std::size_t nodes_discarded = 0;
  std::size_t edges_discarded = 0;
  std::size_t nodes_total_pre = 0;
  std::size_t edges_total_pre = 0;
  std::map<DiscardReason, DiscardCounts> reasons;

  friend bool operator==(const DiscardReport&, const DiscardReport&) = default;
};

struct SanitizeResult {
  BipartiteGraph graph;
  DiscardReport report;
};

// Fixed pipeline: (1) drop non-active IXPs with their rows, (2) drop rows
// whose member IP lies outside every peering prefix of the IXP, (3) collapse
// duplicate (IXP, AS) rows, (4) keep the giant component. An AS left without
// rows by step 1 or 2 is charged to that step. Throws kEmptyGraph when no
// edge survives.
SanitizeResult sanitize(const IxpMerge& merge, std::span<const MembershipRecord> records,
                        std::size_t parse_errors = 0);

// parse -> merge -> sanitize for a PDB and a PCH dataset.
SanitizeResult build_graph(const Dataset& pdb, const Dataset& pch);

struct AttributeReport {
  std::size_t as_types_applied = 0;
  std::size_t locations_applied = 0;
  // Rows naming an ASN or IXP id absent from the graph, plus malformed rows.
  std::size_t warnings = 0;
};

// CSV `asn,as_type`. Rows for ASNs outside the graph are ignored with a warning.
AttributeReport attach_as_types(BipartiteGraph& graph, std::istream& in);
// CSV `ixp_id,country,city,lat,lon`; lat and lon may be empty.
AttributeReport attach_locations(BipartiteGraph& graph, std::istream& in);

// Either path may be absent. Throws kIoError when a given file cannot be read.
AttributeReport attach_attributes(BipartiteGraph& graph,
                                  const std::optional<std::filesystem::path>& as_types,
                                  const std::optional<std::filesystem::path>& locations);

}  // namespace ixpgraph
