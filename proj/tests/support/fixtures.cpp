#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ixpgraph::testing {

BipartiteGraph make_g0(bool typed) {
  BipartiteGraph graph;
  for (const char* id : {"X1", "X2", "X3"}) graph.add_ixp({id, {id}});
  for (const Asn asn : {A1, A2, A3, A4}) graph.add_as({asn});
  const std::pair<const char*, Asn> memberships[] = {
      {"X1", A1}, {"X3", A1}, {"X1", A2}, {"X2", A2}, {"X1", A3}, {"X2", A3}, {"X2", A4}};
  for (const auto& [ixp, asn] : memberships) {
    graph.add_membership({ixp, asn, std::nullopt, {Source::kPdb}});
  }
  if (typed) {
    graph.set_as_type(A1, AsType::kContent);
    graph.set_as_type(A2, AsType::kIsp);
    graph.set_as_type(A3, AsType::kIsp);
    graph.set_as_type(A4, AsType::kEnterprise);
  }
  return graph;
}

std::filesystem::path data_dir() { return IXPGRAPH_TEST_DATA_DIR; }

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("ixpgraph-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace ixpgraph::testing
