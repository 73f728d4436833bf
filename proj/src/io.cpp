#include "matchcert/io.hpp"

#include <cstdint>
#include <sstream>

#include <json.hpp>

namespace matchcert {
namespace io {

namespace {

constexpr int kG6Offset = 63;  // printable base for 6-bit groups
constexpr int kG6MaxShort = 62; // largest n with a one-byte header

// Bit index of pair (i,j), i < j, in graph6 upper-triangle column-major order.
int triIndex(int i, int j) {
    return j * (j - 1) / 2 + i;
}

} // namespace

Graph parseGraph6(std::string_view line) {
    if (line.empty())
        throw ParseError("graph6: empty record");
    std::size_t pos = 0;
    int c0 = static_cast<unsigned char>(line[pos]);
    if (c0 == '~')
        throw UnsupportedSizeError("graph6: extended headers (n > 62) are not supported");
    if (c0 < kG6Offset || c0 > kG6Offset + kG6MaxShort)
        throw ParseError("graph6: malformed header byte");
    int n = c0 - kG6Offset;
    ++pos;

    const int bits = n * (n - 1) / 2;
    const int bodyLen = (bits + 5) / 6;
    if (line.size() - pos < static_cast<std::size_t>(bodyLen))
        throw ParseError("graph6: truncated body");
    if (line.size() - pos > static_cast<std::size_t>(bodyLen))
        throw ParseError("graph6: trailing garbage after body");

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int k = 0; k < bodyLen; ++k) {
        int byte = static_cast<unsigned char>(line[pos + static_cast<std::size_t>(k)]);
        if (byte < kG6Offset || byte > kG6Offset + 63)
            throw ParseError("graph6: body byte out of range");
        int group = byte - kG6Offset;
        for (int b = 5; b >= 0 && bit < bits; --b, ++bit) {
            if (!(group & (1 << b)))
                continue;
            // invert triIndex: find column j with triIndex(0,j) <= bit
            int j = 1;
            while (triIndex(0, j + 1) <= bit)
                ++j;
            edges.emplace_back(bit - triIndex(0, j), j);
        }
        // Padding bits past the triangle must be zero for a canonical record,
        // but showg-style tools ignore them; we do too.
    }
    return Graph::fromEdges(n, edges);
}

std::string emitGraph6(const Graph& g) {
    const int n = g.vertexCount();
    if (n > kG6MaxShort)
        throw UnsupportedSizeError("graph6: vertex count " + std::to_string(n) + " exceeds 62");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Offset));
    const int bits = n * (n - 1) / 2;
    std::vector<bool> bitv(static_cast<std::size_t>(bits), false);
    for (const Edge& e : g.edges())
        bitv[static_cast<std::size_t>(triIndex(e.u, e.v))] = true;
    for (int k = 0; k < bits; k += 6) {
        int group = 0;
        for (int b = 0; b < 6; ++b)
            if (k + b < bits && bitv[static_cast<std::size_t>(k + b)])
                group |= 1 << (5 - b);
        out.push_back(static_cast<char>(group + kG6Offset));
    }
    return out;
}

Graph parseEdgeList(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineNo = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string kw;
            if (!(ls >> kw))
                continue; // blank or comment before the header
            int count = 0;
            std::string rest;
            if (kw != "n" || !(ls >> count) || count < 0 || (ls >> rest))
                throw ParseError("edge list: expected \"n <count>\" at line " +
                                 std::to_string(lineNo));
            n = count;
            continue;
        }
        int u = 0, v = 0;
        std::string rest;
        if (!(ls >> u))
            continue;
        if (!(ls >> v) || (ls >> rest))
            throw ParseError("edge list: expected \"u v\" at line " + std::to_string(lineNo));
        if (u == v)
            throw LoopEdgeError("edge list line " + std::to_string(lineNo) + ": loop edge at vertex " +
                                std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRangeError("edge list line " + std::to_string(lineNo) +
                                        ": vertex out of range");
        edges.emplace_back(u, v);
    }
    if (n < 0)
        throw ParseError("edge list: missing \"n <count>\" header");
    return Graph::fromEdges(n, edges);
}

std::string graphFingerprint(const Graph& g) {
    // FNV-1a over the vertex count and the canonical edge list.
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.vertexCount()));
    for (const Edge& e : g.edges()) {
        mix(static_cast<std::uint64_t>(e.u));
        mix(static_cast<std::uint64_t>(e.v));
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string emitCertificate(const Graph& g, const Certificate& c) {
    if (!verifyCertificate(g, c))
        throw InvalidCertificateError("certificate does not verify against the graph");
    nlohmann::json doc;
    doc["n"] = g.vertexCount();
    doc["fingerprint"] = graphFingerprint(g);
    doc["tool_version"] = kToolVersion;
    if (c.kind == Certificate::Kind::PerfectMatching) {
        doc["kind"] = "perfect_matching";
        auto pairs = nlohmann::json::array();
        for (const Edge& e : c.matching.edges())
            pairs.push_back({e.u, e.v});
        doc["payload"] = pairs;
    } else {
        doc["kind"] = "tutte_violator";
        doc["payload"] = c.violator;
    }
    return doc.dump(2) + "\n";
}

Certificate parseCertificate(std::string_view json, const Graph& g) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate: invalid JSON: ") + e.what());
    }
    try {
        if (doc.at("n").get<int>() != g.vertexCount() ||
            doc.at("fingerprint").get<std::string>() != graphFingerprint(g))
            throw InvalidCertificateError("certificate fingerprint does not match the graph");
        std::string kind = doc.at("kind").get<std::string>();
        if (kind == "perfect_matching") {
            std::vector<std::pair<int, int>> pairs;
            for (const auto& p : doc.at("payload"))
                pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
            return Certificate::perfectMatching(Matching::fromPairs(g.vertexCount(), pairs));
        }
        if (kind == "tutte_violator")
            return Certificate::tutteViolator(doc.at("payload").get<std::vector<int>>());
        throw ParseError("certificate: unknown kind \"" + kind + "\"");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate: malformed document: ") + e.what());
    }
}

} // namespace io
} // namespace matchcert
