#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maxgenus/multigraph.hpp"

namespace maxgenus {

// Parse result: the densified graph plus the original vertex labels,
// indexed by dense id.
struct ParsedGraph {
    Multigraph graph;
    std::vector<long long> vertex_labels;
};

// Format: one edge per line, two whitespace-separated non-negative integer
// labels (equal labels = loop); '#' starts a comment; blank lines ignored.
// Labels may be sparse; they are densified in ascending label order, so an
// already-dense input keeps its ids. Throws ParseError.
ParsedGraph parse_edge_list(std::string_view text);

// Emits dense ids, one edge per line in edge-id order. parse(format(g))
// reproduces g exactly.
std::string format_edge_list(const Multigraph& g);

}  // namespace maxgenus
