#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trichain/moves.hpp"

namespace trichain {

/// Replayable proof object for a reconfiguration path: an ordered move list
/// bracketed by the start and end graph keys.
struct MoveCertificate {
    GraphKey start_key;
    GraphKey end_key;
    int n = 0;
    int d = 0;
    std::vector<Move> moves;
    std::vector<std::string> lemma_tags; // optional, parallel to moves when present

    size_t size() const { return moves.size(); }
    bool empty() const { return moves.empty(); }
};

inline MoveCertificate make_certificate(const RegularGraph& start,
                                        const RegularGraph& end,
                                        std::vector<Move> moves,
                                        std::vector<std::string> tags = {}) {
    MoveCertificate c;
    c.start_key = key(start);
    c.end_key = key(end);
    c.n = start.vertex_count();
    c.d = start.degree();
    c.moves = std::move(moves);
    c.lemma_tags = std::move(tags);
    return c;
}

/// Replays the certificate from `start`. Fails atomically: the input graph is
/// untouched and the first bad step is reported by index.
inline RegularGraph replay(const MoveCertificate& cert, const RegularGraph& start) {
    if (key(start) != cert.start_key)
        fail(ErrorCode::KeyMismatch, "start graph does not match certificate");
    RegularGraph g = start;
    for (size_t i = 0; i < cert.moves.size(); ++i) {
        if (!applicable(g, cert.moves[i]))
            fail(ErrorCode::StepNotApplicable,
                 "step " + std::to_string(i) + " " + cert.moves[i].str(),
                 static_cast<long>(i));
        g = apply(g, cert.moves[i]);
    }
    return g;
}

// ---------------------------------------------------------------------------
// JSON-lines wire format
//
// Header:  {"start": hex, "end": hex, "n": N, "d": D}
// Move:    {"kind": K, "x": ., "w": ., "y": ., "z": .}  with "v" for triangle
//          switches and an optional "lemma" annotation.

inline nlohmann::json move_to_json(const Move& m) {
    nlohmann::json j;
    j["kind"] = move_kind_name(m.kind);
    if (m.is_delta()) j["v"] = m.v;
    j["x"] = m.x;
    j["w"] = m.w;
    j["y"] = m.y;
    j["z"] = m.z;
    return j;
}

inline Move move_from_json(const nlohmann::json& j) {
    Move m{};
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "switch") m.kind = MoveKind::Switch;
    else if (kind == "flip") m.kind = MoveKind::Flip;
    else if (kind == "delta_plus") m.kind = MoveKind::DeltaPlus;
    else if (kind == "delta_minus") m.kind = MoveKind::DeltaMinus;
    else fail(ErrorCode::InvalidFormat, "unknown move kind '" + kind + "'");
    if (m.kind == MoveKind::DeltaPlus || m.kind == MoveKind::DeltaMinus)
        m.v = j.at("v").get<Vertex>();
    m.x = j.at("x").get<Vertex>();
    m.w = j.at("w").get<Vertex>();
    m.y = j.at("y").get<Vertex>();
    m.z = j.at("z").get<Vertex>();
    return m;
}

inline void write_certificate(std::ostream& os, const MoveCertificate& cert) {
    nlohmann::json header;
    header["start"] = cert.start_key.to_hex();
    header["end"] = cert.end_key.to_hex();
    header["n"] = cert.n;
    header["d"] = cert.d;
    os << header.dump() << "\n";
    bool tagged = cert.lemma_tags.size() == cert.moves.size();
    for (size_t i = 0; i < cert.moves.size(); ++i) {
        nlohmann::json j = move_to_json(cert.moves[i]);
        if (tagged) j["lemma"] = cert.lemma_tags[i];
        os << j.dump() << "\n";
    }
}

inline MoveCertificate read_certificate(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) fail(ErrorCode::InvalidFormat, "empty certificate");
    MoveCertificate cert;
    try {
        nlohmann::json header = nlohmann::json::parse(line);
        cert.start_key = GraphKey::from_hex(header.at("start").get<std::string>());
        cert.end_key = GraphKey::from_hex(header.at("end").get<std::string>());
        cert.n = header.at("n").get<int>();
        cert.d = header.at("d").get<int>();
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            nlohmann::json j = nlohmann::json::parse(line);
            cert.moves.push_back(move_from_json(j));
            if (j.contains("lemma"))
                cert.lemma_tags.push_back(j["lemma"].get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidFormat, std::string("certificate parse: ") + e.what());
    }
    if (!cert.lemma_tags.empty() && cert.lemma_tags.size() != cert.moves.size())
        cert.lemma_tags.clear();
    return cert;
}

inline std::string certificate_to_string(const MoveCertificate& cert) {
    std::ostringstream os;
    write_certificate(os, cert);
    return os.str();
}

inline MoveCertificate certificate_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_certificate(is);
}

} // namespace trichain
