#pragma once

#include <string>
#include <string_view>

#include "matchcert/graph.hpp"
#include "matchcert/tutte.hpp"

namespace matchcert {
namespace io {

inline constexpr const char* kToolVersion = "0.1.0";

/// Decodes one graph6 record (standard short header, n <= 62).
Graph parseGraph6(std::string_view line);

/// Canonical graph6 encoding; parseGraph6(emitGraph6(g)) == g.
std::string emitGraph6(const Graph& g);

/// Plain text graphs: a "n <count>" line, then one "u v" line per edge;
/// '#' starts a comment.
Graph parseEdgeList(std::string_view text);

/// Hex digest of the vertex count and canonical sorted edge list.
std::string graphFingerprint(const Graph& g);

/// Serializes a verified certificate as a JSON document. Throws
/// InvalidCertificateError if the certificate does not verify against g.
std::string emitCertificate(const Graph& g, const Certificate& c);

/// Parses a certificate document and checks its fingerprint against g.
/// The returned certificate is not yet verified against the graph.
Certificate parseCertificate(std::string_view json, const Graph& g);

} // namespace io
} // namespace matchcert
