#pragma once

#include <string>

#include <json.hpp>

#include "symcoh/cohomology.hpp"
#include "symcoh/crossed.hpp"
#include "symcoh/error.hpp"

namespace symcoh {

// Machine-readable documents. Keys are emitted sorted, so parsing a document
// and rendering it again reproduces it byte for byte.

nlohmann::json cochain_to_json(const Cochain& c);
/// {"degree": n, "values": [...]} with values checked against the module.
Cochain cochain_from_json(const GModule& m, const nlohmann::json& doc);

/// {"kind": "cohomology", "group": ..., "module": ..., "degree", "flavor",
///  "invariants": [...], "order": "<decimal>", "representatives": [...] (optional)}
nlohmann::json cohomology_to_json(const GModule& m, const CohomologyResult& r, bool with_representatives);
CohomologyResult cohomology_from_json(const GModule& m, const nlohmann::json& doc);

/// {"kind": "comparison", "degree", "source", "target", "source_invariants",
///  "target_invariants", "matrix", "injective", "surjective", "verdict"}
nlohmann::json comparison_to_json(const ComparisonReport& r);
ComparisonReport comparison_from_json(const nlohmann::json& doc);

nlohmann::json section_to_json(const SSection& s);

/// "bijective", "injective", "surjective" or "neither".
const char* map_verdict(const ComparisonReport& r) noexcept;

/// Indented document followed by a newline.
std::string render_document(const nlohmann::json& doc);

/// Human-readable forms.
std::string render_cohomology_text(const GModule& m, const CohomologyResult& r, bool with_representatives);
std::string render_comparison_text(const ComparisonReport& r);

/// 2 validation / invalid parameter, 3 size guard / budget, 4 internal.
int exit_code(ErrorKind kind) noexcept;

}  // namespace symcoh
