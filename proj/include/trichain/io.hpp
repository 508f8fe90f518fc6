#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "trichain/graph.hpp"

namespace trichain {

// Edge-list text format, the interchange format for all CLI commands:
// first line "n m", then m lines "u v" with 1 <= u < v <= n, newline-terminated.

inline void write_edge_list(std::ostream& os, const RegularGraph& g) {
    os << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
}

inline RegularGraph read_edge_list(std::istream& is) {
    int n = 0;
    long m = -1;
    if (!(is >> n >> m)) fail(ErrorCode::InvalidFormat, "missing 'n m' header");
    if (n < 1 || m < 0) fail(ErrorCode::InvalidFormat, "bad 'n m' header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(is >> u >> v))
            fail(ErrorCode::InvalidFormat, "expected " + std::to_string(m) +
                                               " edges, got " + std::to_string(i));
        if (u == v) fail(ErrorCode::Loop, "loop at vertex " + std::to_string(u));
        if (u > v) fail(ErrorCode::InvalidFormat, "edges must satisfy u < v");
        edges.emplace_back(u, v);
    }
    return RegularGraph::from_edges(n, edges);
}

inline RegularGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidFormat, "cannot open " + path);
    return read_edge_list(in);
}

inline void write_edge_list_file(const std::string& path, const RegularGraph& g) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::InvalidFormat, "cannot write " + path);
    write_edge_list(out, g);
}

inline std::string edge_list_to_string(const RegularGraph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

} // namespace trichain
