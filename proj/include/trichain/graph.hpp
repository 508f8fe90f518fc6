#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trichain/errors.hpp"

namespace trichain {

using Vertex = int; // labels are 1..n
using Edge = std::pair<Vertex, Vertex>; // normalised u < v

inline Edge make_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Labelled simple d-regular graph on vertex set {1,...,n}.
///
/// Adjacency is stored twice: as sorted neighbour lists (deterministic
/// iteration) and as bitset rows (O(1) edge tests). Instances are immutable
/// after construction; all mutation produces a new graph.
class RegularGraph {
public:
    /// Validating factory. Degree is inferred and must be uniform.
    static RegularGraph from_edges(int n, const std::vector<Edge>& edges) {
        if (n < 1) fail(ErrorCode::InvalidFormat, "vertex count must be positive");
        RegularGraph g(n);
        for (const auto& [a, b] : edges) {
            if (a < 1 || a > n || b < 1 || b > n)
                fail(ErrorCode::InvalidFormat, "vertex label out of range 1..n");
            if (a == b) fail(ErrorCode::Loop, "loop at vertex " + std::to_string(a));
            if (g.has_edge(a, b))
                fail(ErrorCode::DuplicateEdge,
                     std::to_string(a) + " " + std::to_string(b));
            g.set_edge(a, b);
        }
        int d = static_cast<int>(g.adj_[1].size());
        for (int v = 1; v <= n; ++v) {
            if (static_cast<int>(g.adj_[v].size()) != d)
                fail(ErrorCode::NonRegular,
                     "vertex " + std::to_string(v) + " has degree " +
                         std::to_string(g.adj_[v].size()) + ", expected " +
                         std::to_string(d));
        }
        if ((static_cast<long>(n) * d) % 2 != 0)
            fail(ErrorCode::ParityViolation, "n*d is odd");
        g.degree_ = d;
        g.sort_adjacency();
        return g;
    }

    int vertex_count() const { return n_; }
    int degree() const { return degree_; }
    int edge_count() const { return n_ * degree_ / 2; }

    bool has_edge(Vertex u, Vertex v) const {
        return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    /// Sorted edge list with u < v.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<size_t>(edge_count()));
        for (int u = 1; u <= n_; ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const RegularGraph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }
    bool operator!=(const RegularGraph& other) const { return !(*this == other); }

    /// Graph with edge set replaced by two deletions and two insertions.
    /// Callers must have validated applicability; degree is revalidated.
    RegularGraph rewired(Edge del1, Edge del2, Edge ins1, Edge ins2) const {
        RegularGraph g(*this);
        g.clear_edge_checked(del1);
        g.clear_edge_checked(del2);
        g.set_edge_checked(ins1);
        g.set_edge_checked(ins2);
        g.sort_adjacency();
        for (int v = 1; v <= n_; ++v)
            if (static_cast<int>(g.adj_[v].size()) != degree_)
                fail(ErrorCode::InternalContradiction,
                     "rewire broke regularity at vertex " + std::to_string(v));
        return g;
    }

    /// Construction backdoor for enumerators; adjacency must already be a
    /// valid d-regular simple graph.
    static RegularGraph from_adjacency_unchecked(int n, int d,
                                                 std::vector<std::vector<Vertex>> adj) {
        RegularGraph g(n);
        g.degree_ = d;
        g.adj_ = std::move(adj);
        for (int u = 1; u <= n; ++u)
            for (Vertex v : g.adj_[u]) g.set_bit(u, v);
        g.sort_adjacency();
        return g;
    }

private:
    explicit RegularGraph(int n)
        : n_(n), degree_(0), words_(static_cast<size_t>(n) / 64 + 1),
          adj_(static_cast<size_t>(n) + 1),
          bits_((static_cast<size_t>(n) + 1) * (static_cast<size_t>(n) / 64 + 1), 0) {}

    void set_bit(Vertex u, Vertex v) {
        bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] |=
            (uint64_t{1} << (v & 63));
    }
    void clear_bit(Vertex u, Vertex v) {
        bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] &=
            ~(uint64_t{1} << (v & 63));
    }
    void set_edge(Vertex u, Vertex v) {
        set_bit(u, v);
        set_bit(v, u);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    void set_edge_checked(Edge e) {
        if (has_edge(e.first, e.second))
            fail(ErrorCode::InternalContradiction, "inserting existing edge");
        set_edge(e.first, e.second);
    }
    void clear_edge_checked(Edge e) {
        auto [u, v] = e;
        if (!has_edge(u, v))
            fail(ErrorCode::InternalContradiction, "deleting missing edge");
        clear_bit(u, v);
        clear_bit(v, u);
        adj_[u].erase(std::find(adj_[u].begin(), adj_[u].end(), v));
        adj_[v].erase(std::find(adj_[v].begin(), adj_[v].end(), u));
    }
    void sort_adjacency() {
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int n_;
    int degree_;
    size_t words_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<uint64_t> bits_;
};

// ---------------------------------------------------------------------------
// GraphKey

/// Canonical byte encoding of a labelled graph: vertex count followed by the
/// sorted edge list. Injective on labelled edge sets for a fixed n; not an
/// isomorphism invariant.
struct GraphKey {
    std::vector<uint8_t> bytes;

    bool operator==(const GraphKey& o) const { return bytes == o.bytes; }
    bool operator!=(const GraphKey& o) const { return bytes != o.bytes; }
    bool operator<(const GraphKey& o) const { return bytes < o.bytes; }

    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(bytes.size() * 2);
        for (uint8_t b : bytes) {
            s.push_back(digits[b >> 4]);
            s.push_back(digits[b & 15]);
        }
        return s;
    }

    static GraphKey from_hex(const std::string& hex) {
        if (hex.size() % 2 != 0) fail(ErrorCode::InvalidFormat, "odd hex length");
        auto nibble = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            fail(ErrorCode::InvalidFormat, "bad hex digit");
        };
        GraphKey k;
        k.bytes.reserve(hex.size() / 2);
        for (size_t i = 0; i < hex.size(); i += 2)
            k.bytes.push_back(static_cast<uint8_t>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
        return k;
    }
};

inline GraphKey key(const RegularGraph& g) {
    GraphKey k;
    int n = g.vertex_count();
    auto push16 = [&k](int x) {
        k.bytes.push_back(static_cast<uint8_t>(x >> 8));
        k.bytes.push_back(static_cast<uint8_t>(x & 0xff));
    };
    push16(n);
    for (int u = 1; u <= n; ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) {
                push16(u);
                push16(v);
            }
    return k;
}

// ---------------------------------------------------------------------------
// Queries

/// All triangles {a,b,c} with a < b < c, in lexicographic order.
inline std::vector<std::array<Vertex, 3>> triangles(const RegularGraph& g) {
    std::vector<std::array<Vertex, 3>> out;
    int n = g.vertex_count();
    for (int a = 1; a <= n; ++a)
        for (Vertex b : g.neighbors(a)) {
            if (b <= a) continue;
            for (Vertex c : g.neighbors(b)) {
                if (c <= b) continue;
                if (g.has_edge(a, c)) out.push_back({a, b, c});
            }
        }
    return out;
}

inline long triangle_count(const RegularGraph& g) {
    long cnt = 0;
    int n = g.vertex_count();
    for (int a = 1; a <= n; ++a)
        for (Vertex b : g.neighbors(a)) {
            if (b <= a) continue;
            for (Vertex c : g.neighbors(b))
                if (c > b && g.has_edge(a, c)) ++cnt;
        }
    return cnt;
}

/// True iff some triangle contains v.
inline bool in_triangle(const RegularGraph& g, Vertex v) {
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (g.has_edge(nb[i], nb[j])) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Components

/// Component id per vertex (1-based ids in discovery order; index 0 unused).
inline std::vector<int> component_ids(const RegularGraph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n) + 1, 0);
    int next = 0;
    std::vector<Vertex> stack;
    for (int s = 1; s <= n; ++s) {
        if (comp[s]) continue;
        comp[s] = ++next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (!comp[w]) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
    }
    return comp;
}

inline std::vector<Vertex> component_of(const RegularGraph& g, Vertex v) {
    auto comp = component_ids(g);
    std::vector<Vertex> out;
    for (int u = 1; u <= g.vertex_count(); ++u)
        if (comp[u] == comp[v]) out.push_back(u);
    return out;
}

inline bool is_connected_graph(const RegularGraph& g) {
    auto comp = component_ids(g);
    for (int u = 1; u <= g.vertex_count(); ++u)
        if (comp[u] != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Layering

/// BFS-level decomposition of the component of a root vertex, with the
/// within-level degree d', in-degree and out-degree of every vertex in that
/// component. Vertices outside the component have level -1.
struct Layering {
    Vertex root = 0;
    std::vector<std::vector<Vertex>> levels; // levels[i] sorted
    std::vector<int> level;                  // per vertex, -1 if unreachable
    std::vector<int> dprime;
    std::vector<int> indeg;
    std::vector<int> outdeg;

    int ell() const { return levels.size() > 2 ? static_cast<int>(levels[2].size()) : 0; }
    int depth() const { return static_cast<int>(levels.size()) - 1; }
    size_t component_size() const {
        size_t s = 0;
        for (const auto& l : levels) s += l.size();
        return s;
    }
    const std::vector<Vertex>& at(size_t i) const {
        static const std::vector<Vertex> empty;
        return i < levels.size() ? levels[i] : empty;
    }
};

inline Layering layer(const RegularGraph& g, Vertex root) {
    int n = g.vertex_count();
    if (root < 1 || root > n) fail(ErrorCode::Precondition, "root out of range");
    Layering L;
    L.root = root;
    L.level.assign(static_cast<size_t>(n) + 1, -1);
    L.dprime.assign(static_cast<size_t>(n) + 1, 0);
    L.indeg.assign(static_cast<size_t>(n) + 1, 0);
    L.outdeg.assign(static_cast<size_t>(n) + 1, 0);
    L.level[root] = 0;
    L.levels.push_back({root});
    size_t frontier = 0;
    while (frontier < L.levels.size()) {
        std::vector<Vertex> next;
        for (Vertex u : L.levels[frontier])
            for (Vertex w : g.neighbors(u))
                if (L.level[w] < 0) {
                    L.level[w] = static_cast<int>(frontier) + 1;
                    next.push_back(w);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        L.levels.push_back(std::move(next));
        ++frontier;
    }
    for (const auto& lvl : L.levels)
        for (Vertex u : lvl)
            for (Vertex w : g.neighbors(u)) {
                int du = L.level[u], dw = L.level[w];
                if (dw == du) ++L.dprime[u];
                else if (dw == du - 1) ++L.indeg[u];
                else ++L.outdeg[u];
            }
    return L;
}

// ---------------------------------------------------------------------------
// Fragments and the T graph

/// A d-regular graph on n vertices is a fragment iff d+1 < n < 2(d+1).
inline bool is_fragment(const RegularGraph& g) {
    int n = g.vertex_count(), d = g.degree();
    return d + 1 < n && n < 2 * (d + 1);
}

inline bool size_is_fragment(int component_size, int d) {
    return d + 1 < component_size && component_size < 2 * (d + 1);
}

/// T_{d,d,1}: K_{d,d} minus the half-matching {a_i b_i : i <= d/2}, plus an
/// apex joined to a_i and b_i for i <= d/2. Labels: a_i = i, b_i = d+i,
/// apex = 2d+1. Triangle-free and d-regular on 2d+1 vertices; d must be even.
inline RegularGraph construct_T(int d) {
    if (d < 2 || d % 2 != 0) fail(ErrorCode::OddDegree, "T_{d,d,1} needs even d >= 2");
    int apex = 2 * d + 1;
    std::vector<Edge> edges;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            if (!(i == j && i <= d / 2)) edges.push_back(make_edge(i, d + j));
    for (int i = 1; i <= d / 2; ++i) {
        edges.push_back(make_edge(i, apex));
        edges.push_back(make_edge(d + i, apex));
    }
    return RegularGraph::from_edges(apex, edges);
}

// ---------------------------------------------------------------------------
// Derived graphs

inline RegularGraph complement(const RegularGraph& g) {
    int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return RegularGraph::from_edges(n, edges);
}

/// Induced subgraph on `keep` (which must be a union of components, so the
/// result is regular), relabelled to 1..|keep| in label order. Returns the
/// subgraph and the old->new label map (0 where absent).
inline std::pair<RegularGraph, std::vector<Vertex>>
extract_components(const RegularGraph& g, const std::vector<Vertex>& keep) {
    std::vector<Vertex> to_new(static_cast<size_t>(g.vertex_count()) + 1, 0);
    std::vector<Vertex> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    int next = 0;
    for (Vertex v : sorted) to_new[v] = ++next;
    std::vector<Edge> edges;
    for (Vertex u : sorted)
        for (Vertex w : g.neighbors(u)) {
            if (!to_new[w])
                fail(ErrorCode::Precondition, "extract set is not a union of components");
            if (u < w) edges.push_back(make_edge(to_new[u], to_new[w]));
        }
    return {RegularGraph::from_edges(next, edges), std::move(to_new)};
}

} // namespace trichain
