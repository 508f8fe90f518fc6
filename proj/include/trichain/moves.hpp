#pragma once

#include <array>
#include <string>
#include <vector>

#include "trichain/graph.hpp"

namespace trichain {

enum class MoveKind : uint8_t { Switch, Flip, DeltaPlus, DeltaMinus };

inline const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Switch: return "switch";
        case MoveKind::Flip: return "flip";
        case MoveKind::DeltaPlus: return "delta_plus";
        case MoveKind::DeltaMinus: return "delta_minus";
    }
    return "?";
}

/// One degree-preserving move. Edge semantics per kind:
///
///   Switch(x,y,w,z)      deletes {xy, wz}, inserts {xw, yz}
///   Flip(x,y,w,z)        as Switch, and additionally requires edge wy
///   DeltaPlus(v,x,w,y,z) deletes {xy, wz}, inserts {xw, yz}; requires the
///                        path y-x-v-w-z, so the insertion makes triangle vxw
///   DeltaMinus(v,x,w,y,z) deletes {xw, yz}, inserts {xy, wz}; requires
///                        triangle vxw and edge yz, and breaks the triangle
///
/// v is the witness common neighbour of x and w; it is 0 for Switch/Flip.
/// A DeltaMinus with the same tuple exactly reverses the DeltaPlus.
struct Move {
    MoveKind kind;
    Vertex v = 0;
    Vertex x = 0;
    Vertex w = 0;
    Vertex y = 0;
    Vertex z = 0;

    static Move delta_plus(Vertex v, Vertex x, Vertex w, Vertex y, Vertex z) {
        return Move{MoveKind::DeltaPlus, v, x, w, y, z};
    }
    static Move delta_minus(Vertex v, Vertex x, Vertex w, Vertex y, Vertex z) {
        return Move{MoveKind::DeltaMinus, v, x, w, y, z};
    }
    static Move plain_switch(Vertex x, Vertex y, Vertex w, Vertex z) {
        return Move{MoveKind::Switch, 0, x, w, y, z};
    }
    static Move flip(Vertex x, Vertex y, Vertex w, Vertex z) {
        return Move{MoveKind::Flip, 0, x, w, y, z};
    }

    std::array<Edge, 2> deleted() const {
        if (kind == MoveKind::DeltaMinus) return {make_edge(x, w), make_edge(y, z)};
        return {make_edge(x, y), make_edge(w, z)};
    }
    std::array<Edge, 2> inserted() const {
        if (kind == MoveKind::DeltaMinus) return {make_edge(x, y), make_edge(w, z)};
        return {make_edge(x, w), make_edge(y, z)};
    }

    bool is_delta() const {
        return kind == MoveKind::DeltaPlus || kind == MoveKind::DeltaMinus;
    }

    bool operator==(const Move& o) const {
        return kind == o.kind && v == o.v && x == o.x && w == o.w && y == o.y && z == o.z;
    }

    /// Lexicographic (kind, v, x, w, y, z); gives the deterministic move order.
    bool operator<(const Move& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (v != o.v) return v < o.v;
        if (x != o.x) return x < o.x;
        if (w != o.w) return w < o.w;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }

    std::string str() const {
        std::string s = move_kind_name(kind);
        s += "(";
        if (is_delta()) s += std::to_string(v) + ";";
        s += std::to_string(x) + "," + std::to_string(w) + "," + std::to_string(y) +
             "," + std::to_string(z) + ")";
        return s;
    }
};

inline bool applicable(const RegularGraph& g, const Move& m) {
    int n = g.vertex_count();
    auto in_range = [n](Vertex a) { return a >= 1 && a <= n; };
    std::array<Vertex, 5> vs{m.v, m.x, m.w, m.y, m.z};
    size_t first = m.is_delta() ? 0 : 1;
    for (size_t i = first; i < 5; ++i) {
        if (!in_range(vs[i])) return false;
        for (size_t j = i + 1; j < 5; ++j)
            if (vs[i] == vs[j]) return false;
    }
    switch (m.kind) {
        case MoveKind::Switch:
            return g.has_edge(m.x, m.y) && g.has_edge(m.w, m.z) &&
                   !g.has_edge(m.x, m.w) && !g.has_edge(m.y, m.z);
        case MoveKind::Flip:
            return g.has_edge(m.x, m.y) && g.has_edge(m.w, m.z) &&
                   g.has_edge(m.w, m.y) && !g.has_edge(m.x, m.w) &&
                   !g.has_edge(m.y, m.z);
        case MoveKind::DeltaPlus:
            return g.has_edge(m.x, m.y) && g.has_edge(m.x, m.v) &&
                   g.has_edge(m.v, m.w) && g.has_edge(m.w, m.z) &&
                   !g.has_edge(m.x, m.w) && !g.has_edge(m.y, m.z);
        case MoveKind::DeltaMinus:
            return g.has_edge(m.x, m.v) && g.has_edge(m.v, m.w) &&
                   g.has_edge(m.x, m.w) && g.has_edge(m.y, m.z) &&
                   !g.has_edge(m.x, m.y) && !g.has_edge(m.w, m.z);
    }
    return false;
}

inline RegularGraph apply(const RegularGraph& g, const Move& m) {
    if (!applicable(g, m)) fail(ErrorCode::NotApplicable, m.str());
    auto del = m.deleted();
    auto ins = m.inserted();
    return g.rewired(del[0], del[1], ins[0], ins[1]);
}

inline Move invert(const Move& m) {
    switch (m.kind) {
        case MoveKind::DeltaPlus: return Move{MoveKind::DeltaMinus, m.v, m.x, m.w, m.y, m.z};
        case MoveKind::DeltaMinus: return Move{MoveKind::DeltaPlus, m.v, m.x, m.w, m.y, m.z};
        case MoveKind::Switch: return Move::plain_switch(m.x, m.w, m.y, m.z);
        case MoveKind::Flip: return Move::flip(m.x, m.w, m.y, m.z);
    }
    return m;
}

/// All applicable triangle switches, deduplicated by (edge delta, witness v)
/// and emitted in lexicographic tuple order. The mirrored encoding
/// (v,w,x,z,y) of the same move is suppressed by requiring x < w.
inline std::vector<Move> enumerate_delta_switches(const RegularGraph& g) {
    std::vector<Move> out;
    int n = g.vertex_count();
    for (Vertex v = 1; v <= n; ++v) {
        const auto& nv = g.neighbors(v);
        for (size_t i = 0; i < nv.size(); ++i) {
            for (size_t j = i + 1; j < nv.size(); ++j) {
                Vertex x = nv[i], w = nv[j]; // x < w by sortedness
                if (!g.has_edge(x, w)) {
                    // make: y-x-v-w-z with xw, yz non-edges
                    for (Vertex y : g.neighbors(x)) {
                        if (y == v || y == w) continue;
                        for (Vertex z : g.neighbors(w)) {
                            if (z == v || z == x || z == y) continue;
                            if (!g.has_edge(y, z))
                                out.push_back(Move::delta_plus(v, x, w, y, z));
                        }
                    }
                } else {
                    // break: triangle vxw plus a detached edge yz
                    for (Vertex y = 1; y <= n; ++y) {
                        if (y == v || y == x || y == w || g.has_edge(x, y)) continue;
                        for (Vertex z : g.neighbors(y)) {
                            if (z == v || z == x || z == w) continue;
                            if (!g.has_edge(w, z))
                                out.push_back(Move::delta_minus(v, x, w, y, z));
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All applicable flips (x,y,w,z): edges xy, wz, wy present, xw, yz absent.
/// Used by the fragment path oracle; order is deterministic.
inline std::vector<Move> enumerate_flips(const RegularGraph& g) {
    std::vector<Move> out;
    int n = g.vertex_count();
    for (Vertex w = 1; w <= n; ++w)
        for (Vertex y : g.neighbors(w)) {
            // x adjacent to y, z adjacent to w; xw, yz non-edges
            for (Vertex x : g.neighbors(y)) {
                if (x == w || g.has_edge(x, w)) continue;
                for (Vertex z : g.neighbors(w)) {
                    if (z == y || z == x || g.has_edge(y, z)) continue;
                    out.push_back(Move::flip(x, y, w, z));
                }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace trichain
