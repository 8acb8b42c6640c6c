#include "ixpgraph/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>

#include "ixpgraph/csv.hpp"
#include "ixpgraph/error.hpp"

namespace ixpgraph {
namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return in;
}

// Compares a header line against the expected column list, ignoring case and
// surrounding blanks.
bool header_matches(std::string_view line, std::string_view expected) {
  const auto got = csv::split(line);
  const auto want = csv::split(expected);
  if (!got || got->size() != want->size()) return false;
  for (std::size_t i = 0; i < got->size(); ++i) {
    const auto a = csv::trim((*got)[i]);
    const auto& b = (*want)[i];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (std::tolower(static_cast<unsigned char>(a[k])) != b[k]) return false;
    }
  }
  return true;
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

int status_rank(IxpStatus status) {
  switch (status) {
    case IxpStatus::kActive: return 0;
    case IxpStatus::kInactive: return 1;
    case IxpStatus::kNotApproved: return 2;
  }
  return 0;
}

IxpStatus worse(IxpStatus a, IxpStatus b) { return status_rank(a) >= status_rank(b) ? a : b; }

// Parses the nine membership columns; returns an error message on failure.
std::optional<std::string> parse_row(const std::vector<std::string>& fields, Source kind,
                                     MembershipRecord& out) {
  if (fields.size() != 9) {
    return "expected 9 columns, got " + std::to_string(fields.size());
  }
  std::vector<std::string_view> f;
  for (const auto& field : fields) f.push_back(csv::trim(field));

  if (f[0].empty()) {
    out.source = kind;
  } else {
    auto source = parse_source(f[0]);
    if (!source || *source != kind) return "source '" + std::string(f[0]) + "' does not match";
    out.source = *source;
  }
  if (f[1].empty()) return "empty ixp_key";
  out.ixp_key = f[1];
  out.ixp_name = f[2];

  std::string_view prefixes = f[3];
  while (!prefixes.empty()) {
    const auto cut = prefixes.find(';');
    const auto piece = csv::trim(prefixes.substr(0, cut));
    prefixes = cut == std::string_view::npos ? std::string_view{} : prefixes.substr(cut + 1);
    if (piece.empty()) continue;
    auto cidr = Cidr::parse(piece);
    if (!cidr) return "bad prefix '" + std::string(piece) + "'";
    out.ixp_prefixes.push_back(*cidr);
  }

  auto asn = parse_asn(f[4]);
  if (!asn) return "bad asn '" + std::string(f[4]) + "'";
  out.asn = *asn;

  if (!f[5].empty()) {
    out.member_ip = IpAddress::parse(f[5]);
    if (!out.member_ip) return "bad member_ip '" + std::string(f[5]) + "'";
  }

  auto status = parse_ixp_status(f[6]);
  if (!status) return "bad status '" + std::string(f[6]) + "'";
  out.status = *status;

  if (!f[7].empty()) {
    out.as_type = parse_as_type(f[7]);
    if (!out.as_type) return "bad as_type '" + std::string(f[7]) + "'";
  }
  if (!f[8].empty()) {
    out.as_prefix_count = parse_number<std::uint64_t>(f[8]);
    if (!out.as_prefix_count) return "bad as_prefix_count '" + std::string(f[8]) + "'";
  }
  return std::nullopt;
}

// Minimal union-find with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string MembershipRecord::source_key() const {
  return std::string(to_string(source)) + ":" + ixp_key;
}

Dataset parse_dataset(const std::filesystem::path& path, Source kind) {
  auto in = open_input(path);
  return parse_dataset(in, kind);
}

Dataset parse_dataset(std::istream& in, Source kind) {
  csv::Reader reader(in);
  const auto header = reader.next_line();
  if (!header || !header_matches(*header, kMembershipHeader)) {
    throw Error(ErrorCode::kFormatError,
                "membership header must be '" + std::string(kMembershipHeader) + "'");
  }

  Dataset dataset;
  dataset.source = kind;
  while (auto line = reader.next_line()) {
    auto fields = csv::split(*line);
    MembershipRecord record;
    std::optional<std::string> problem;
    if (!fields) {
      problem = "unterminated quote";
    } else {
      problem = parse_row(*fields, kind, record);
    }
    if (problem) {
      ++dataset.parse_errors;
      dataset.diagnostics.push_back("line " + std::to_string(reader.line_number()) + ": " +
                                    *problem);
      continue;
    }
    dataset.records.push_back(std::move(record));
  }
  return dataset;
}

std::string normalize_ixp_name(std::string_view name) {
  std::string out;
  bool pending_space = false;
  for (unsigned char c : name) {
    const bool separator = std::isspace(c) || c == '-' || c == '_' || c == '.' || c == ',';
    if (separator) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

const MergedIxp& IxpMerge::resolve(const MembershipRecord& record) const {
  auto it = by_source_key.find(record.source_key());
  if (it == by_source_key.end()) {
    throw Error(ErrorCode::kInvalidArgument, "record for unmerged IXP " + record.source_key());
  }
  return ixps.at(it->second);
}

IxpMerge merge_ixp_lists(std::span<const MembershipRecord> pdb,
                         std::span<const MembershipRecord> pch) {
  struct LocalIxp {
    std::set<std::string> names;
    std::set<Cidr> prefixes;
    IxpStatus status = IxpStatus::kActive;
  };
  std::map<std::string, LocalIxp> local;
  for (const auto records : {pdb, pch}) {
    for (const auto& record : records) {
      auto& ixp = local[record.source_key()];
      if (!record.ixp_name.empty()) ixp.names.insert(record.ixp_name);
      ixp.prefixes.insert(record.ixp_prefixes.begin(), record.ixp_prefixes.end());
      ixp.status = worse(ixp.status, record.status);
    }
  }

  std::vector<std::string> keys;
  std::vector<const LocalIxp*> entries;
  for (const auto& [key, ixp] : local) {
    keys.push_back(key);
    entries.push_back(&ixp);
  }
  DisjointSets sets(keys.size());

  std::map<std::string, std::size_t> first_by_name;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& name : entries[i]->names) {
      const auto normalized = normalize_ixp_name(name);
      if (normalized.empty()) continue;
      auto [it, inserted] = first_by_name.emplace(normalized, i);
      if (!inserted) sets.unite(it->second, i);
    }
  }

  std::vector<std::pair<Cidr, std::size_t>> prefixes;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& prefix : entries[i]->prefixes) prefixes.emplace_back(prefix, i);
  }
  for (std::size_t p = 0; p < prefixes.size(); ++p) {
    for (std::size_t q = p + 1; q < prefixes.size(); ++q) {
      if (prefixes[p].second != prefixes[q].second &&
          prefixes[p].first.overlaps(prefixes[q].first)) {
        sets.unite(prefixes[p].second, prefixes[q].second);
      }
    }
  }

  // Keys are sorted and each root is its group's smallest index, so walking
  // indices in order meets the groups in order of their smallest source key.
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (sets.find(i) == i) roots.push_back(i);
  }
  const std::size_t width = std::max<std::size_t>(4, std::to_string(roots.size()).size());
  std::map<std::size_t, IxpId> id_of_root;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    auto number = std::to_string(r + 1);
    id_of_root[roots[r]] = "IXP" + std::string(width - number.size(), '0') + number;
  }

  IxpMerge merge;
  std::map<IxpId, std::set<std::string>> names;
  std::map<IxpId, std::set<Cidr>> group_prefixes;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto& id = id_of_root.at(sets.find(i));
    auto& merged = merge.ixps[id];
    merged.id = id;
    merged.source_keys.push_back(keys[i]);
    merged.status = worse(merged.status, entries[i]->status);
    names[id].insert(entries[i]->names.begin(), entries[i]->names.end());
    group_prefixes[id].insert(entries[i]->prefixes.begin(), entries[i]->prefixes.end());
    merge.by_source_key.emplace(keys[i], id);
  }
  for (auto& [id, merged] : merge.ixps) {
    merged.names.assign(names[id].begin(), names[id].end());
    if (merged.names.empty()) merged.names.push_back(merged.source_keys.front());
    merged.prefixes.assign(group_prefixes[id].begin(), group_prefixes[id].end());
  }
  return merge;
}

std::string_view to_string(DiscardReason reason) {
  switch (reason) {
    case DiscardReason::kInactiveIxp: return "InactiveIxp";
    case DiscardReason::kIpInconsistent: return "IpInconsistent";
    case DiscardReason::kNotInGiantComponent: return "NotInGiantComponent";
    case DiscardReason::kDuplicateCollapsed: return "DuplicateCollapsed";
    case DiscardReason::kParseError: return "ParseError";
  }
  return "Unknown";
}

SanitizeResult sanitize(const IxpMerge& merge, std::span<const MembershipRecord> records,
                        std::size_t parse_errors) {
  DiscardReport report;
  for (const auto reason : {DiscardReason::kInactiveIxp, DiscardReason::kIpInconsistent,
                            DiscardReason::kNotInGiantComponent,
                            DiscardReason::kDuplicateCollapsed, DiscardReason::kParseError}) {
    report.reasons[reason] = {};
  }
  report.reasons[DiscardReason::kParseError].edges = parse_errors;

  std::set<Asn> all_asns;
  for (const auto& record : records) all_asns.insert(record.asn);
  report.nodes_total_pre = merge.ixps.size() + all_asns.size();
  report.edges_total_pre = records.size() + parse_errors;

  // Returns the ASNs still backed by at least one of `rows`.
  const auto asns_of = [&](const std::vector<const MembershipRecord*>& rows) {
    std::set<Asn> out;
    for (const auto* row : rows) out.insert(row->asn);
    return out;
  };

  // (1) inactive or not-approved IXPs.
  std::vector<const MembershipRecord*> active_rows;
  auto& inactive = report.reasons[DiscardReason::kInactiveIxp];
  for (const auto& [id, ixp] : merge.ixps) {
    if (ixp.status != IxpStatus::kActive) ++inactive.nodes;
  }
  for (const auto& record : records) {
    if (merge.resolve(record).status == IxpStatus::kActive) {
      active_rows.push_back(&record);
    } else {
      ++inactive.edges;
    }
  }
  const auto after_status = asns_of(active_rows);
  inactive.nodes += all_asns.size() - after_status.size();

  // (2) member IPs outside every peering prefix of the unified IXP.
  std::vector<const MembershipRecord*> consistent_rows;
  auto& inconsistent = report.reasons[DiscardReason::kIpInconsistent];
  for (const auto* row : active_rows) {
    if (row->member_ip) {
      const auto& prefixes = merge.resolve(*row).prefixes;
      const bool inside = std::any_of(prefixes.begin(), prefixes.end(),
                                      [&](const Cidr& p) { return p.contains(*row->member_ip); });
      if (!inside) {
        ++inconsistent.edges;
        continue;
      }
    }
    consistent_rows.push_back(row);
  }
  const auto after_ip = asns_of(consistent_rows);
  inconsistent.nodes += after_status.size() - after_ip.size();

  // (3) one edge per (IXP, AS), sources merged.
  BipartiteGraph graph;
  for (const auto& [id, ixp] : merge.ixps) {
    if (ixp.status != IxpStatus::kActive) continue;
    graph.add_ixp({id, ixp.names, ixp.prefixes, std::nullopt, IxpStatus::kActive});
  }
  for (const Asn asn : after_ip) graph.add_as({asn});
  for (const auto& record : records) {
    if (!graph.has_as(record.asn)) continue;
    const auto& node = graph.as_node(record.asn);
    if (node.type == AsType::kUnknown && record.as_type && *record.as_type != AsType::kUnknown) {
      graph.set_as_type(record.asn, *record.as_type);
    }
  }
  std::map<Asn, std::uint64_t> prefix_counts;
  for (const auto& record : records) {
    if (record.as_prefix_count && after_ip.contains(record.asn)) {
      prefix_counts.emplace(record.asn, *record.as_prefix_count);
    }
  }
  auto& duplicates = report.reasons[DiscardReason::kDuplicateCollapsed];
  for (const auto* row : consistent_rows) {
    const auto& id = merge.resolve(*row).id;
    if (graph.has_ixp(id) && graph.members(id).contains(row->asn)) ++duplicates.edges;
    graph.add_membership({id, row->asn, row->member_ip, {row->source}});
  }

  for (const auto& [asn, count] : prefix_counts) graph.set_as_prefix_count(asn, count);

  if (graph.edge_count() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "no membership survives sanitisation");
  }

  // (4) giant component.
  auto component = giant_component(graph);
  report.reasons[DiscardReason::kNotInGiantComponent] = {component.nodes_discarded,
                                                         component.edges_discarded};

  for (const auto& [reason, counts] : report.reasons) {
    report.nodes_discarded += counts.nodes;
    report.edges_discarded += counts.edges;
  }
  return {std::move(component.graph), report};
}

SanitizeResult build_graph(const Dataset& pdb, const Dataset& pch) {
  const auto merge = merge_ixp_lists(pdb.records, pch.records);
  std::vector<MembershipRecord> records = pdb.records;
  records.insert(records.end(), pch.records.begin(), pch.records.end());
  return sanitize(merge, records, pdb.parse_errors + pch.parse_errors);
}

AttributeReport attach_as_types(BipartiteGraph& graph, std::istream& in) {
  csv::Reader reader(in);
  AttributeReport report;
  const auto header = reader.next_line();
  if (!header) return report;
  if (!header_matches(*header, "asn,as_type")) {
    throw Error(ErrorCode::kFormatError, "AS type header must be 'asn,as_type'");
  }
  while (auto line = reader.next_line()) {
    const auto fields = csv::split(*line);
    if (!fields || fields->size() != 2) {
      ++report.warnings;
      continue;
    }
    const auto asn = parse_asn(csv::trim((*fields)[0]));
    const auto type = parse_as_type(csv::trim((*fields)[1]));
    if (!asn || !type || !graph.has_as(*asn)) {
      ++report.warnings;
      continue;
    }
    graph.set_as_type(*asn, *type);
    ++report.as_types_applied;
  }
  return report;
}

AttributeReport attach_locations(BipartiteGraph& graph, std::istream& in) {
  csv::Reader reader(in);
  AttributeReport report;
  const auto header = reader.next_line();
  if (!header) return report;
  if (!header_matches(*header, "ixp_id,country,city,lat,lon")) {
    throw Error(ErrorCode::kFormatError, "location header must be 'ixp_id,country,city,lat,lon'");
  }
  while (auto line = reader.next_line()) {
    const auto fields = csv::split(*line);
    if (!fields || fields->size() != 5) {
      ++report.warnings;
      continue;
    }
    std::vector<std::string_view> f;
    for (const auto& field : *fields) f.push_back(csv::trim(field));
    const IxpId id(f[0]);
    if (!graph.has_ixp(id)) {
      ++report.warnings;
      continue;
    }
    Location location{std::string(f[1]), std::string(f[2]), std::nullopt, std::nullopt};
    if (!f[3].empty()) location.lat = parse_number<double>(f[3]);
    if (!f[4].empty()) location.lon = parse_number<double>(f[4]);
    if ((!f[3].empty() && !location.lat) || (!f[4].empty() && !location.lon)) {
      ++report.warnings;
      continue;
    }
    graph.set_ixp_location(id, std::move(location));
    ++report.locations_applied;
  }
  return report;
}

AttributeReport attach_attributes(BipartiteGraph& graph,
                                  const std::optional<std::filesystem::path>& as_types,
                                  const std::optional<std::filesystem::path>& locations) {
  AttributeReport total;
  if (as_types) {
    auto in = open_input(*as_types);
    const auto part = attach_as_types(graph, in);
    total.as_types_applied += part.as_types_applied;
    total.warnings += part.warnings;
  }
  if (locations) {
    auto in = open_input(*locations);
    const auto part = attach_locations(graph, in);
    total.locations_applied += part.locations_applied;
    total.warnings += part.warnings;
  }
  return total;
}

}  // namespace ixpgraph
