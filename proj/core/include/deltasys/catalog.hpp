#pragma once

// Small named structures used by the CLI, tests and suites.

#include "deltasys/structure.hpp"

#include <string>
#include <utility>
#include <vector>

namespace deltasys {

Signature graph_signature();           // E/2
Signature order_signature();           // "<"/2
Signature hypergraph_signature(std::size_t k); // R/k

/// Undirected graph with both orientations of each edge stored.
Structure make_graph(std::vector<std::string> ids, const std::vector<std::pair<std::string, std::string>>& edges);
/// Graph on ids "0".."n-1".
Structure make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

Structure complete_graph(std::size_t n);
Structure empty_graph(std::size_t n);
Structure path_graph(std::size_t n);
/// Strict order 0 < 1 < ... < n-1.
Structure chain(std::size_t n);
/// All orderings of each k-subset of [n] are stored.
Structure complete_hypergraph(std::size_t k, std::size_t n);
Structure make_hypergraph(std::size_t k, std::size_t n, const std::vector<std::vector<std::size_t>>& edges);

std::vector<std::string> numbered_ids(std::size_t n, const std::string& prefix = "");

} // namespace deltasys
