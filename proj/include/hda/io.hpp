#pragma once

#include "hda/bisim.hpp"
#include "hda/core.hpp"
#include "hda/labels.hpp"
#include "hda/unfolding.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace hda {

/// On-disk form of an HDA:
///
///   {"cubes": [{"id": "y1", "dim": 1, "d0": ["x0"], "d1": ["x1"]}, ...],
///    "initial": "x0",
///    "labels": {"y1": "a", ...},        optional, 1-cubes only
///    "pos": {"x0": [0, 0], ...}}        optional layout hints
///
/// d0[k-1] is δ_k^0, d1[k-1] is δ_k^1.
struct HdaDocument
{
    std::vector<CubeRecord> cubes;
    std::string initial;
    std::optional<EdgeLabels> labels;
    std::map<std::string, std::pair<double, double>> pos;

    bool operator==( const HdaDocument& ) const = default;
};

/// Throws SyntaxError for malformed JSON and SemanticError for JSON that does
/// not have the document shape.
[[nodiscard]] HdaDocument parse_document( std::string_view text );
[[nodiscard]] HdaDocument document_from_json( const nlohmann::json& j );

/// Builds and validates; every problem is reported as SemanticError.
[[nodiscard]] Hda to_hda( const HdaDocument& doc );
[[nodiscard]] Hda parse_hda( std::string_view text );
[[nodiscard]] Hda load_hda( const std::string& path );
[[nodiscard]] std::string read_file( const std::string& path );

[[nodiscard]] HdaDocument to_document( const Hda& h );

/// Sorted keys and sorted cube ids, two-space indent, trailing newline.
[[nodiscard]] nlohmann::json to_json( const HdaDocument& doc );
[[nodiscard]] std::string serialize( const HdaDocument& doc );
[[nodiscard]] std::string serialize( const Hda& h );

/// 0-cubes as nodes, 1-cubes as arrows labeled "symbol id", higher cubes
/// as shaded record nodes listing their faces. Output is sorted by id.
[[nodiscard]] std::string emit_dot( const Hda& h, std::string_view name = "hda" );
/// Same for an unfolding; nodes outside the complete part are dashed.
[[nodiscard]] std::string emit_dot( const TruncatedUnfolding& u );

/// {"kind":"extend","side":"A","k":1,"target":"y1"} or
/// {"kind":"retreat","k":1,"nu":0}.
[[nodiscard]] nlohmann::json move_to_json( const Move& m, const Hda& a, const Hda& b );
/// Throws InputError for malformed moves and unknown targets.
[[nodiscard]] Move move_from_json( const nlohmann::json& j, const Hda& a, const Hda& b );
[[nodiscard]] std::string format_move( const Move& m, const Hda& a, const Hda& b );

/// Surviving relation, deleted pairs with rank and spoiler move.
[[nodiscard]] nlohmann::json witness_json( const BisimResult& r, const Hda& x, const Hda& y );

} // namespace hda
