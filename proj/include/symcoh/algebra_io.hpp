#pragma once

#include <string>

#include <json.hpp>

#include "symcoh/group.hpp"
#include "symcoh/module.hpp"

namespace symcoh {

// Group documents:
//   {"cyclic": n}
//   {"symmetric": n}
//   {"product": [<group>, <group>]}
//   {"table": [[...], ...], "name": "..."}        (name optional)
//
// Module documents (relative to a group):
//   {"exponents": [d1, ...], "action": "trivial"}
//   {"exponents": [d],       "action": "sign"}
//   {"exponents": [...], "action": {"generator_matrices": {"<index>": [[...]], ...}}}
//   {"exponents": [...], "action": {"element_matrices": [[[...]], ...]}}
//
// Validation errors carry a JSON-path prefix, e.g. "$.product[1].table: ...".

FiniteGroup group_from_json(const nlohmann::json& doc, const std::string& path = "$");
GModule module_from_json(const FiniteGroup& g, const nlohmann::json& doc, const std::string& path = "$");

nlohmann::json group_to_json(const FiniteGroup& g);
nlohmann::json module_to_json(const GModule& m);

/// Accepts inline shorthands ("cyclic:9", "symmetric:3", "product:3,3"),
/// a JSON document starting with '{', or a path to a JSON file.
FiniteGroup parse_group_spec(const std::string& text);

/// Shorthands "trivial:3", "trivial:2,4", "sign:3"; otherwise JSON or a file.
GModule parse_module_spec(const FiniteGroup& g, const std::string& text);

/// Reads and parses a JSON file; errors are validation errors naming the file.
nlohmann::json load_json_file(const std::string& path);

}  // namespace symcoh
