#pragma once

#include <string>
#include <string_view>

#include "mincut/graph.hpp"

namespace mincut {

/// Graph text format:
///   line 1:        "n m"
///   lines 2..m+1:  "u v w"  with 0 <= u < v < n and w a nonnegative integer
/// Lines starting with '#' are comments and do not count toward m.
ContractibleGraph parse_graph(std::string_view text);

/// Canonical serialization: merged edges in ascending (u, v) order, one
/// trailing newline. Only defined for uncontracted graphs.
std::string serialize_graph(const ContractibleGraph& g);

ContractibleGraph load_graph_file(const std::string& path);
void save_graph_file(const ContractibleGraph& g, const std::string& path);

}  // namespace mincut
