#include "ixpgraph/cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "ixpgraph/csv.hpp"
#include "ixpgraph/error.hpp"
#include "ixpgraph/ingest.hpp"
#include "ixpgraph/metrics.hpp"
#include "ixpgraph/placement.hpp"
#include "ixpgraph/projection.hpp"
#include "ixpgraph/serialize.hpp"

namespace ixpgraph {
namespace {

using nlohmann::json;

// Bad flag values that CLI11 cannot see, such as a malformed ASN list.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A share in [0, 1] that is rendered as a percentage.
struct Percent {
  double share = 0.0;
};

using Cell = std::variant<std::string, std::int64_t, double, Percent>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string format_percent(double share) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1f", share * 100.0);
  return buffer;
}

std::string cell_to_csv(const Cell& cell) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return csv::escape(value);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(value);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(value);
        } else {
          return format_percent(value.share);
        }
      },
      cell);
}

json cell_to_json(const Cell& cell) {
  return std::visit(
      [](const auto& value) -> json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, Percent>) {
          return value.share * 100.0;
        } else {
          return value;
        }
      },
      cell);
}

void emit(const Table& table, bool as_json, json document, std::ostream& out) {
  if (as_json) {
    document["columns"] = table.columns;
    document["rows"] = json::array();
    for (const auto& row : table.rows) {
      json object;
      for (std::size_t i = 0; i < row.size(); ++i) object[table.columns[i]] = cell_to_json(row[i]);
      document["rows"].push_back(std::move(object));
    }
    out << document.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_to_csv(row[i]);
    out << '\n';
  }
}

std::int64_t as_int(std::uint64_t value) { return static_cast<std::int64_t>(value); }

Asn require_asn(const std::string& text, const char* flag) {
  auto asn = parse_asn(csv::trim(text));
  if (!asn) throw UsageError(std::string(flag) + ": not an AS number: '" + text + "'");
  return *asn;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = std::string(csv::trim(item));
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  return in;
}

NodeClass require_class(const std::string& text) {
  auto value = parse_node_class(text);
  if (!value) throw UsageError("--class must be 'ixp' or 'as', got '" + text + "'");
  return *value;
}

void require_as_types(const BipartiteGraph& graph) {
  for (const auto& [asn, node] : graph.ases()) {
    if (node.type != AsType::kUnknown) return;
  }
  throw Error(ErrorCode::kMissingAttribute, "graph carries no AS types; rebuild with --as-types");
}

struct Options {
  std::optional<unsigned> threads;

  std::string pdb;
  std::string pch;
  std::optional<std::string> as_types;
  std::optional<std::string> locations;

  std::string metric;
  std::string graph_file;
  std::optional<std::string> node_class;
  bool json = false;
  std::string thresholds = "0,20,30";
  std::optional<std::size_t> sample;
  std::uint64_t seed = 42;
  std::string as;
  std::string via;
  std::int64_t bucket = 5;
  std::optional<std::string> policy;
  bool keep_unknown = false;

  std::string mode;
  std::optional<std::string> targets;
  std::optional<std::string> targets_file;
  std::optional<std::string> costs;
  std::optional<std::string> weights;
  std::optional<double> budget;
  std::string country;
  std::string city;

  std::string format;
  std::optional<std::string> output;
};

unsigned resolve_threads(const Options& options) {
  if (options.threads) return *options.threads;
  const char* env = std::getenv("IXPGRAPH_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  unsigned value = 0;
  const std::string_view text(env);
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw UsageError("IXPGRAPH_THREADS must be a non-negative integer");
  }
  return value;
}

// ---- build ----------------------------------------------------------------

int cmd_build(const Options& options, std::ostream& out, std::ostream& err) {
  const auto pdb = parse_dataset(options.pdb, Source::kPdb);
  const auto pch = parse_dataset(options.pch, Source::kPch);
  for (const auto* dataset : {&pdb, &pch}) {
    for (const auto& line : dataset->diagnostics) err << "warning: " << line << '\n';
  }
  auto result = build_graph(pdb, pch);
  const auto attributes = attach_attributes(
      result.graph,
      options.as_types ? std::optional<std::filesystem::path>(*options.as_types) : std::nullopt,
      options.locations ? std::optional<std::filesystem::path>(*options.locations)
                        : std::nullopt);
  save_graph(options.output.value(), result.graph);

  const auto& report = result.report;
  out << "graph: " << result.graph.ixps().size() << " ixps, " << result.graph.ases().size()
      << " ases, " << result.graph.edge_count() << " edges\n";
  out << "pre-pipeline: " << report.nodes_total_pre << " nodes, " << report.edges_total_pre
      << " edges\n";
  out << "discarded: " << report.nodes_discarded << " nodes, " << report.edges_discarded
      << " edges\n";
  for (const auto& [reason, counts] : report.reasons) {
    out << "  " << to_string(reason) << ": " << counts.nodes << " nodes, " << counts.edges
        << " edges\n";
  }
  out << "attributes: " << attributes.as_types_applied << " as types, "
      << attributes.locations_applied << " locations, " << attributes.warnings << " warnings\n";
  return kExitOk;
}

// ---- metrics --------------------------------------------------------------

Table degree_cdf_table(const BipartiteGraph& graph, NodeClass node_class) {
  const auto distribution = degree_distribution(graph, node_class);
  const auto cdf = distribution.cdf();
  Table table{{"degree", "count", "cdf"}, {}};
  for (std::size_t i = 0; i < distribution.values.size(); ++i) {
    const auto& [degree, count] = distribution.values[i];
    table.rows.push_back({degree, as_int(count), cdf[i]});
  }
  return table;
}

Table member_types_table(const BipartiteGraph& graph) {
  require_as_types(graph);
  Table table{{"ixp_id", "members", "content", "enterprise", "isp"}, {}};
  for (const auto& [id, fractions] : member_type_fractions(graph)) {
    table.rows.push_back({id, as_int(graph.degree(id)), Percent{fractions.content},
                          Percent{fractions.enterprise}, Percent{fractions.isp}});
  }
  return table;
}

Table member_types_cdf_table(const BipartiteGraph& graph) {
  require_as_types(graph);
  const auto fractions = member_type_fractions(graph);
  Table table{{"type", "fraction", "cdf"}, {}};
  for (const auto type : {AsType::kContent, AsType::kEnterprise, AsType::kIsp}) {
    for (const auto& [fraction, cdf] : member_type_cdf(fractions, type)) {
      table.rows.push_back({std::string(to_string(type)), fraction, cdf});
    }
  }
  return table;
}

Table type_share_table(const BipartiteGraph& graph, const std::string& thresholds_text) {
  require_as_types(graph);
  std::vector<std::int64_t> thresholds;
  for (const auto& item : split_list(thresholds_text)) {
    std::int64_t value = 0;
    const auto result = std::from_chars(item.data(), item.data() + item.size(), value);
    if (result.ec != std::errc() || result.ptr != item.data() + item.size()) {
      throw UsageError("--thresholds: not an integer: '" + item + "'");
    }
    thresholds.push_back(value);
  }
  if (thresholds.empty()) throw UsageError("--thresholds must list at least one value");
  Table table{{"subset", "ases", "content", "enterprise", "isp"}, {}};
  for (const auto& row : type_share_by_degree(graph, thresholds).rows) {
    table.rows.push_back({row.label, as_int(row.as_count), Percent{row.shares.content},
                          Percent{row.shares.enterprise}, Percent{row.shares.isp}});
  }
  return table;
}

Table path_table(const BipartiteGraph& graph, const Options& options, unsigned threads) {
  PathOptions path_options;
  path_options.sample_size = options.sample;
  path_options.seed = options.seed;
  path_options.threads = threads;
  const auto distribution = shortest_path_ixp_counts(graph, path_options);
  Table table{{"ixps_crossed", "pairs", "percent"}, {}};
  for (const auto& [crossed, count] : distribution.values) {
    table.rows.push_back({crossed, as_int(count), Percent{distribution.fraction(crossed)}});
  }
  return table;
}

Table multiplicity_table(const BipartiteGraph& graph, const Options& options) {
  if (options.bucket < 0) throw UsageError("--bucket must be >= 0");
  const auto node_class = require_class(options.node_class.value_or("ixp"));
  auto mg = project(graph, node_class);
  if (options.policy) {
    auto in = open_input(*options.policy);
    const auto policy = read_policy_csv(in);
    mg = apply_policy(mg, policy, PolicyOptions{options.keep_unknown}).graph;
  }
  auto distribution =
      std::visit([](const auto& g) { return multiplicity_distribution(g); }, mg);
  if (options.bucket > 0) distribution = distribution.bucketed(options.bucket);
  Table table{{"multiplicity", "pairs", "percent"}, {}};
  for (const auto& [multiplicity, count] : distribution.values) {
    Cell label = multiplicity;
    if (options.bucket > 0 && multiplicity == options.bucket) {
      label = ">=" + std::to_string(multiplicity);
    }
    table.rows.push_back({label, as_int(count), Percent{distribution.fraction(multiplicity)}});
  }
  return table;
}

Table gain_table(const BipartiteGraph& graph, const Options& options) {
  if (options.as.empty() || options.via.empty()) throw UsageError("gain needs --as and --via");
  const Asn a = require_asn(options.as, "--as");
  const Asn b = require_asn(options.via, "--via");
  const auto gain = remote_peering_gain(graph, a, b);
  return Table{{"as", "via", "gain"},
               {{std::int64_t{a.value}, std::int64_t{b.value}, as_int(gain)}}};
}

Table gain_cdf_table(const BipartiteGraph& graph, unsigned threads) {
  const auto distribution = remote_peering_gain_cdf(graph, threads);
  const auto cdf = distribution.cdf();
  Table table{{"gain", "count", "cdf"}, {}};
  for (std::size_t i = 0; i < distribution.values.size(); ++i) {
    const auto& [gain, count] = distribution.values[i];
    table.rows.push_back({gain, as_int(count), cdf[i]});
  }
  return table;
}

Table correlation_table(const BipartiteGraph& graph) {
  std::int64_t with_prefixes = 0;
  for (const auto& [asn, node] : graph.ases()) {
    if (node.prefix_count) ++with_prefixes;
  }
  return Table{{"ases", "pearson"}, {{with_prefixes, degree_prefix_correlation(graph)}}};
}

Cell node_cell(const IxpId& id) { return id; }
Cell node_cell(Asn asn) { return std::int64_t{asn.value}; }

Table centrality_table(const BipartiteGraph& graph, const Options& options, bool betweenness,
                       unsigned threads) {
  const auto node_class = require_class(options.node_class.value_or("ixp"));
  const auto mg = project(graph, node_class);
  Table table{{"node", betweenness ? "betweenness" : "clustering"}, {}};
  std::visit(
      [&](const auto& g) {
        const auto scores =
            betweenness ? betweenness_centrality(g, threads) : clustering_coefficient(g);
        for (const auto& [node, score] : scores) table.rows.push_back({node_cell(node), score});
      },
      mg);
  return table;
}

const std::vector<std::string>& metric_names() {
  static const std::vector<std::string> names = {
      "degree-cdf", "member-types", "member-types-cdf", "table1", "table2", "table3",
      "gain",       "gain-cdf",     "correlation",      "betweenness", "clustering"};
  return names;
}

int cmd_metrics(const Options& options, const CLI::App& command, unsigned threads,
                std::ostream& out, std::ostream& err) {
  const auto& names = metric_names();
  if (std::find(names.begin(), names.end(), options.metric) == names.end()) {
    err << "unknown metric '" << options.metric << "'\n" << command.help();
    return kExitDomainError;
  }
  const auto graph = load_graph(options.graph_file);
  json document;
  document["metric"] = options.metric;

  Table table;
  const auto& metric = options.metric;
  if (metric == "degree-cdf") {
    const auto node_class = require_class(options.node_class.value_or("as"));
    document["class"] = to_string(node_class);
    table = degree_cdf_table(graph, node_class);
  } else if (metric == "member-types") {
    table = member_types_table(graph);
  } else if (metric == "member-types-cdf") {
    table = member_types_cdf_table(graph);
  } else if (metric == "table1") {
    table = type_share_table(graph, options.thresholds);
  } else if (metric == "table2") {
    if (options.sample) {
      document["sample"] = *options.sample;
      document["seed"] = options.seed;
    }
    table = path_table(graph, options, threads);
  } else if (metric == "table3") {
    document["class"] = options.node_class.value_or("ixp");
    table = multiplicity_table(graph, options);
  } else if (metric == "gain") {
    table = gain_table(graph, options);
  } else if (metric == "gain-cdf") {
    table = gain_cdf_table(graph, threads);
  } else if (metric == "correlation") {
    table = correlation_table(graph);
  } else {
    document["class"] = options.node_class.value_or("ixp");
    table = centrality_table(graph, options, metric == "betweenness", threads);
  }
  emit(table, options.json, std::move(document), out);
  return kExitOk;
}

// ---- place ----------------------------------------------------------------

std::set<Asn> read_targets(const BipartiteGraph& graph, const Options& options) {
  std::set<Asn> targets;
  if (options.targets && csv::trim(*options.targets) == "all") {
    for (const auto& [asn, node] : graph.ases()) targets.insert(asn);
    return targets;
  }
  if (options.targets) {
    for (const auto& item : split_list(*options.targets)) {
      targets.insert(require_asn(item, "--targets"));
    }
  }
  if (options.targets_file) {
    auto in = open_input(*options.targets_file);
    csv::Reader reader(in);
    while (auto line = reader.next_line()) {
      const auto text = csv::trim(*line);
      if (text == "asn") continue;
      auto asn = parse_asn(text);
      if (!asn) {
        throw Error(ErrorCode::kFormatError,
                    "targets file line " + std::to_string(reader.line_number()));
      }
      targets.insert(*asn);
    }
  }
  if (targets.empty()) throw UsageError("place needs --targets or --targets-file");
  return targets;
}

// Two-column CSV with the given header; `parse_key` maps the first column.
template <typename Key, typename ParseKey>
std::map<Key, double> read_value_file(const std::string& path, std::string_view header,
                                      ParseKey parse_key) {
  auto in = open_input(path);
  csv::Reader reader(in);
  std::map<Key, double> values;
  const auto first = reader.next_line();
  if (!first || csv::trim(*first) != header) {
    throw Error(ErrorCode::kFormatError, path + ": header must be '" + std::string(header) + "'");
  }
  while (auto line = reader.next_line()) {
    const auto fields = csv::split(*line);
    std::optional<Key> key;
    double value = 0.0;
    bool ok = fields && fields->size() == 2;
    if (ok) {
      key = parse_key(std::string(csv::trim((*fields)[0])));
      const auto text = csv::trim((*fields)[1]);
      const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
      ok = key && result.ec == std::errc() && result.ptr == text.data() + text.size();
    }
    if (!ok) {
      throw Error(ErrorCode::kFormatError,
                  path + ": bad line " + std::to_string(reader.line_number()));
    }
    values[*key] = value;
  }
  return values;
}

json solution_to_json(const std::string& mode, const PlacementSolution& solution) {
  json document;
  document["mode"] = mode;
  document["chosen"] = solution.chosen;
  document["covered"] = json::array();
  for (const Asn asn : solution.covered) document["covered"].push_back(asn.value);
  document["total_cost"] = solution.total_cost;
  document["total_weight"] = solution.total_weight;
  return document;
}

int cmd_place(const Options& options, std::ostream& out) {
  const auto graph = load_graph(options.graph_file);
  json document;
  if (options.mode == "cover" || options.mode == "budget") {
    const auto targets = read_targets(graph, options);
    std::map<IxpId, double> costs;
    std::map<Asn, double> weights;
    if (options.costs) {
      costs = read_value_file<IxpId>(*options.costs, "ixp_id,cost",
                                     [](const std::string& s) { return std::optional(s); });
    }
    if (options.weights) {
      weights = read_value_file<Asn>(*options.weights, "asn,weight",
                                     [](const std::string& s) { return parse_asn(s); });
    }
    const auto instance = build_instance(graph, targets, costs, weights);
    if (options.mode == "cover") {
      document = solution_to_json(options.mode, greedy_set_cover(instance));
    } else {
      if (!options.budget) throw UsageError("place budget needs --budget");
      document = solution_to_json(options.mode, budgeted_max_coverage(instance, *options.budget));
      document["budget"] = *options.budget;
    }
  } else if (options.mode == "tunnels") {
    if (options.as.empty()) throw UsageError("place tunnels needs --as");
    const Asn a = require_asn(options.as, "--as");
    document["mode"] = options.mode;
    document["as"] = a.value;
    document["tunnels"] = json::array();
    for (const auto& [b, gain] : rank_tunnels(graph, a)) {
      document["tunnels"].push_back({{"asn", b.value}, {"gain", gain}});
    }
  } else if (options.mode == "site") {
    if (options.country.empty()) throw UsageError("place site needs --country");
    document["mode"] = options.mode;
    document["country"] = options.country;
    document["city"] = options.city;
    document["score"] = site_selection_score(graph, {options.country, options.city});
  } else {
    throw UsageError("place mode must be one of cover, budget, tunnels, site");
  }
  out << document.dump(2) << '\n';
  return kExitOk;
}

// ---- export / import ------------------------------------------------------

void write_output(const std::optional<std::string>& path, const std::string& data,
                  std::ostream& out) {
  if (!path) {
    out << data;
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << data)) throw Error(ErrorCode::kIoError, "cannot write " + *path);
}

bool valid_format(const std::string& format) { return format == "edgelist" || format == "json"; }

int cmd_export(const Options& options, const CLI::App& command, std::ostream& out,
               std::ostream& err) {
  if (!valid_format(options.format)) {
    err << "--format must be 'edgelist' or 'json'\n" << command.help();
    return kExitDomainError;
  }
  const auto graph = load_graph(options.graph_file);
  write_output(options.output,
               options.format == "json" ? write_graph_json(graph) : write_edgelist(graph), out);
  return kExitOk;
}

int cmd_import(const Options& options, const CLI::App& command, std::ostream& out,
               std::ostream& err) {
  if (!valid_format(options.format)) {
    err << "--format must be 'edgelist' or 'json'\n" << command.help();
    return kExitDomainError;
  }
  BipartiteGraph graph;
  if (options.format == "json") {
    graph = load_graph(options.graph_file);
  } else {
    auto in = open_input(options.graph_file);
    graph = read_edgelist(in);
  }
  write_output(options.output, write_graph_json(graph), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"IXP membership graph toolkit", "ixpgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", options.threads,
                 "Worker threads; 0 or unset uses all cores (env IXPGRAPH_THREADS)");

  auto* build = app.add_subcommand("build", "Build the canonical graph from PDB and PCH exports");
  build->add_option("--pdb", options.pdb, "PeeringDB membership CSV")->required();
  build->add_option("--pch", options.pch, "PCH membership CSV")->required();
  build->add_option("--as-types", options.as_types, "CSV asn,as_type");
  build->add_option("--locations", options.locations, "CSV ixp_id,country,city,lat,lon");
  build->add_option("--out", options.output, "Graph file to write")->required();

  auto* metrics = app.add_subcommand("metrics", "Compute one metric as CSV or JSON");
  metrics->add_option("metric", options.metric, "degree-cdf, member-types, member-types-cdf, "
                                                "table1, table2, table3, gain, gain-cdf, "
                                                "correlation, betweenness, clustering")
      ->required();
  metrics->add_option("graph", options.graph_file, "Graph file")->required();
  metrics->add_option("--class", options.node_class, "Node class: ixp or as");
  metrics->add_flag("--json", options.json, "Emit JSON instead of CSV");
  metrics->add_option("--thresholds", options.thresholds, "Degree thresholds for table1")
      ->capture_default_str();
  metrics->add_option("--sample", options.sample, "Sampled BFS sources for table2");
  metrics->add_option("--seed", options.seed, "Sampling seed")->capture_default_str();
  metrics->add_option("--as", options.as, "Source AS for gain");
  metrics->add_option("--via", options.via, "Tunnel AS for gain");
  metrics->add_option("--bucket", options.bucket, "Fold multiplicities >= N; 0 disables")
      ->capture_default_str();
  metrics->add_option("--policy", options.policy, "CSV asn_a,asn_b,relation for table3");
  metrics->add_flag("--keep-unknown", options.keep_unknown,
                    "Keep pairs with unknown relation under --policy");

  auto* place = app.add_subcommand("place", "IXP selection and remote peering planning");
  place->add_option("mode", options.mode, "cover, budget, tunnels or site")->required();
  place->add_option("graph", options.graph_file, "Graph file")->required();
  place->add_option("--targets", options.targets, "Comma separated ASNs or 'all'");
  place->add_option("--targets-file", options.targets_file, "One ASN per line");
  place->add_option("--costs", options.costs, "CSV ixp_id,cost");
  place->add_option("--weights", options.weights, "CSV asn,weight");
  place->add_option("--budget", options.budget, "Budget for the budget mode");
  place->add_option("--as", options.as, "AS for the tunnels mode");
  place->add_option("--country", options.country, "Country for the site mode");
  place->add_option("--city", options.city, "City for the site mode; empty matches all");

  auto* export_cmd = app.add_subcommand("export", "Write a graph as edgelist or JSON");
  export_cmd->add_option("graph", options.graph_file, "Graph file")->required();
  export_cmd->add_option("--format", options.format, "edgelist or json");
  export_cmd->add_option("--out", options.output, "Output file; stdout when absent");

  auto* import_cmd = app.add_subcommand("import", "Read an edgelist or JSON export back");
  import_cmd->add_option("file", options.graph_file, "Exported file")->required();
  import_cmd->add_option("--format", options.format, "edgelist or json");
  import_cmd->add_option("--out", options.output, "Graph file; stdout when absent");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsageError;
  }

  try {
    const unsigned threads = resolve_threads(options);
    if (build->parsed()) return cmd_build(options, out, err);
    if (metrics->parsed()) return cmd_metrics(options, *metrics, threads, out, err);
    if (place->parsed()) return cmd_place(options, out);
    if (export_cmd->parsed()) return cmd_export(options, *export_cmd, out, err);
    return cmd_import(options, *import_cmd, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace ixpgraph
