#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "ixpgraph/model.hpp"

namespace ixpgraph {

inline constexpr int kGraphFormatVersion = 1;

// Canonical graph document:
//   {"version":1,"ixps":[...],"ases":[...],"edges":[...]}
// Arrays are sorted by id, object keys are sorted and absent optional fields
// are omitted, so equal graphs serialise to identical bytes.
std::string write_graph_json(const BipartiteGraph& graph);

// Throws kFormatError on malformed documents or an unsupported version.
BipartiteGraph read_graph_json(std::string_view text);

// One "ixp_id<TAB>asn" line per edge, sorted by (ixp_id, asn).
std::string write_edgelist(const BipartiteGraph& graph);
// Inverse of write_edgelist; IXPs are named after their ids.
BipartiteGraph read_edgelist(std::istream& in);

// Thin file wrappers; throw kIoError when the file cannot be opened.
void save_graph(const std::filesystem::path& path, const BipartiteGraph& graph);
BipartiteGraph load_graph(const std::filesystem::path& path);

// CSV `asn_a,asn_b,relation` with relation in {p2p, c2p, p2c, unknown}
// (CAIDA's 0 and -1 codes are accepted too). c2p means asn_a is a customer of asn_b.
PolicyLayer read_policy_csv(std::istream& in);

}  // namespace ixpgraph
