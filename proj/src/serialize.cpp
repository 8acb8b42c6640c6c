#include "ixpgraph/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ixpgraph/csv.hpp"
#include "ixpgraph/error.hpp"

namespace ixpgraph {
namespace {

using nlohmann::json;

template <typename T, typename Parse>
T parse_enum(const json& value, Parse parse, const char* what) {
  auto parsed = parse(value.get<std::string>());
  if (!parsed) throw Error(ErrorCode::kFormatError, std::string("bad ") + what);
  return *parsed;
}

json ixp_to_json(const IxpNode& node) {
  json out;
  out["id"] = node.id;
  out["names"] = node.names;
  json prefixes = json::array();
  for (const auto& prefix : node.peering_prefixes) prefixes.push_back(prefix.to_string());
  out["peering_prefixes"] = std::move(prefixes);
  out["status"] = to_string(node.status);
  if (node.location) {
    json location;
    location["country"] = node.location->country;
    location["city"] = node.location->city;
    if (node.location->lat) location["lat"] = *node.location->lat;
    if (node.location->lon) location["lon"] = *node.location->lon;
    out["location"] = std::move(location);
  }
  return out;
}

IxpNode ixp_from_json(const json& in) {
  IxpNode node;
  node.id = in.at("id").get<std::string>();
  node.names = in.at("names").get<std::vector<std::string>>();
  for (const auto& text : in.at("peering_prefixes")) {
    auto prefix = Cidr::parse(text.get<std::string>());
    if (!prefix) throw Error(ErrorCode::kFormatError, "bad prefix in IXP " + node.id);
    node.peering_prefixes.push_back(*prefix);
  }
  node.status = parse_enum<IxpStatus>(in.at("status"), parse_ixp_status, "IXP status");
  if (in.contains("location")) {
    const auto& location = in["location"];
    Location value{location.at("country").get<std::string>(),
                   location.at("city").get<std::string>(), std::nullopt, std::nullopt};
    if (location.contains("lat")) value.lat = location["lat"].get<double>();
    if (location.contains("lon")) value.lon = location["lon"].get<double>();
    node.location = std::move(value);
  }
  return node;
}

json as_to_json(const AsNode& node) {
  json out;
  out["asn"] = node.asn.value;
  out["type"] = to_string(node.type);
  if (node.prefix_count) out["prefix_count"] = *node.prefix_count;
  if (node.prefixes) out["prefixes"] = *node.prefixes;
  return out;
}

AsNode as_from_json(const json& in) {
  AsNode node;
  node.asn = Asn{in.at("asn").get<std::uint32_t>()};
  node.type = parse_enum<AsType>(in.at("type"), parse_as_type, "AS type");
  if (in.contains("prefix_count")) node.prefix_count = in["prefix_count"].get<std::uint64_t>();
  if (in.contains("prefixes")) node.prefixes = in["prefixes"].get<std::vector<std::string>>();
  return node;
}

json edge_to_json(const MembershipEdge& edge) {
  json out;
  out["ixp"] = edge.ixp;
  out["asn"] = edge.asn.value;
  if (edge.member_ip) out["member_ip"] = edge.member_ip->to_string();
  json sources = json::array();
  for (const auto source : edge.sources) sources.push_back(to_string(source));
  out["sources"] = std::move(sources);
  return out;
}

MembershipEdge edge_from_json(const json& in) {
  MembershipEdge edge;
  edge.ixp = in.at("ixp").get<std::string>();
  edge.asn = Asn{in.at("asn").get<std::uint32_t>()};
  if (in.contains("member_ip")) {
    edge.member_ip = IpAddress::parse(in["member_ip"].get<std::string>());
    if (!edge.member_ip) throw Error(ErrorCode::kFormatError, "bad member_ip");
  }
  for (const auto& source : in.at("sources")) {
    edge.sources.insert(parse_enum<Source>(source, parse_source, "edge source"));
  }
  return edge;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string write_graph_json(const BipartiteGraph& graph) {
  json doc;
  doc["version"] = kGraphFormatVersion;
  doc["ixps"] = json::array();
  for (const auto& [id, node] : graph.ixps()) doc["ixps"].push_back(ixp_to_json(node));
  doc["ases"] = json::array();
  for (const auto& [asn, node] : graph.ases()) doc["ases"].push_back(as_to_json(node));
  doc["edges"] = json::array();
  for (const auto& [key, edge] : graph.edges()) doc["edges"].push_back(edge_to_json(edge));
  return doc.dump(2) + "\n";
}

BipartiteGraph read_graph_json(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    if (!doc.is_object() || doc.value("version", 0) != kGraphFormatVersion) {
      throw Error(ErrorCode::kFormatError, "unsupported graph document version");
    }
    BipartiteGraph graph;
    for (const auto& ixp : doc.at("ixps")) graph.add_ixp(ixp_from_json(ixp));
    for (const auto& as : doc.at("ases")) graph.add_as(as_from_json(as));
    for (const auto& edge : doc.at("edges")) graph.add_membership(edge_from_json(edge));
    return graph;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormatError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kFormatError) throw;
    throw Error(ErrorCode::kFormatError, e.what());
  }
}

std::string write_edgelist(const BipartiteGraph& graph) {
  std::string out;
  for (const auto& [key, edge] : graph.edges()) {
    out += key.first;
    out += '\t';
    out += to_string(key.second);
    out += '\n';
  }
  return out;
}

BipartiteGraph read_edgelist(std::istream& in) {
  BipartiteGraph graph;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (csv::trim(line).empty()) continue;
    const auto tab = line.find('\t');
    const auto asn = tab == std::string::npos ? std::nullopt : parse_asn(line.substr(tab + 1));
    if (!asn || tab == 0) {
      throw Error(ErrorCode::kFormatError, "edgelist line " + std::to_string(number));
    }
    const IxpId id = line.substr(0, tab);
    if (!graph.has_ixp(id)) graph.add_ixp({id, {id}});
    if (!graph.has_as(*asn)) graph.add_as({*asn});
    graph.add_membership({id, *asn, std::nullopt, {Source::kOther}});
  }
  return graph;
}

void save_graph(const std::filesystem::path& path, const BipartiteGraph& graph) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << write_graph_json(graph);
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path.string());
}

BipartiteGraph load_graph(const std::filesystem::path& path) {
  return read_graph_json(read_file(path));
}

PolicyLayer read_policy_csv(std::istream& in) {
  csv::Reader reader(in);
  PolicyLayer policy;
  const auto header = reader.next_line();
  if (!header) return policy;
  const auto columns = csv::split(*header);
  if (!columns || columns->size() != 3 || csv::trim((*columns)[0]) != "asn_a") {
    throw Error(ErrorCode::kFormatError, "policy header must be 'asn_a,asn_b,relation'");
  }
  while (auto line = reader.next_line()) {
    const auto fields = csv::split(*line);
    if (!fields || fields->size() != 3) {
      throw Error(ErrorCode::kFormatError, "policy line " + std::to_string(reader.line_number()));
    }
    const auto a = parse_asn(csv::trim((*fields)[0]));
    const auto b = parse_asn(csv::trim((*fields)[1]));
    const auto relation = parse_relation(csv::trim((*fields)[2]));
    if (!a || !b || !relation || *a == *b) {
      throw Error(ErrorCode::kFormatError, "policy line " + std::to_string(reader.line_number()));
    }
    policy.set(*a, *b, *relation);
  }
  return policy;
}

}  // namespace ixpgraph
