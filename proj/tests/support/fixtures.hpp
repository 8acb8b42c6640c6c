#pragma once

#include <filesystem>
#include <string>

#include "ixpgraph/model.hpp"

namespace ixpgraph::testing {

// IXPs X1..X3, ASes 1..4 with A1 -> {X1, X3}, A2 -> {X1, X2}, A3 -> {X1, X2}
// and A4 -> {X2}. With `typed`, A1 is Content, A2 and A3 are ISPs and A4 is
// an Enterprise.
BipartiteGraph make_g0(bool typed = false);

inline const Asn A1{1};
inline const Asn A2{2};
inline const Asn A3{3};
inline const Asn A4{4};

std::filesystem::path data_dir();
std::string read_text(const std::filesystem::path& path);

// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

}  // namespace ixpgraph::testing
