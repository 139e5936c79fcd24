#pragma once

// Self-contained JSON certificates. Every certificate embeds its witness
// (coloring, tuple, matrix row) so verify_certificate can re-check it
// without repeating the search that produced it.
//
// Layout:
//   { "schema": "radolab.certificate/1", "kind": ..., "equation": ["1","1","-1"],
//     "payload": {...}, "meta": {"tool_version", "command", "timestamp"?} }
// Arbitrary-precision integers are decimal strings, rationals "p/q" strings;
// colors, sizes and 1-based indices are JSON integers.

#include <rado/algebra.hpp>
#include <rado/coloring.hpp>
#include <rado/linkage.hpp>
#include <rado/strong.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace rado {

using Json = nlohmann::json;

inline constexpr std::string_view certificate_schema = "radolab.certificate/1";

/// Negative search claims (no coloring at length N) are re-searched during
/// verification only up to this length.
inline constexpr std::size_t recheck_cap = 64;

struct CertificateMeta {
    std::string tool_version;
    std::string command;
    std::optional<std::string> timestamp;
};

Json make_certificate(const Equation& eq, std::string_view kind, Json payload,
                      const CertificateMeta& meta = {});

Json regularity_payload(const Equation& eq);
Json ratios_payload(const Equation& eq, std::optional<std::size_t> family_n = std::nullopt);
Json linkage_payload(const Equation& eq, std::size_t m_cap, const std::optional<LinkageMatrix>& best);
Json radius_payload(int palette, std::size_t cap, std::span<const Row> ineqs,
                    const RadiusResult& result);
/// Result of find-coloring (kind "coloring", mode "search").
Json search_payload(int palette, std::size_t n, std::span<const Row> ineqs,
                    const std::optional<Coloring>& found);
/// Result of verify-coloring (kind "coloring", mode "verify").
Json verification_payload(const Coloring& col, std::span<const Row> ineqs,
                          const VerifyOutcome& outcome);
Json solution_payload(std::span<const Row> ineqs, const Coloring& col,
                      const std::optional<StrongSolution>& solution);
Json walk_payload(const LinkageMatrix& mat, const Integer& x, const Coloring& col,
                  const WalkResult& walk);

/// True iff the certificate's claim re-verifies. Throws Error(Errc::schema)
/// for malformed documents.
bool verify_certificate(const Json& cert);

Json coloring_to_json(const Coloring& col);
Coloring coloring_from_json(const Json& j);

} // namespace rado
