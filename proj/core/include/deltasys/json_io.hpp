#pragma once

// JSON formats. Every document may carry "schema": "<kind>/1"; when absent
// the kind is inferred from the fields present. Unknown fields are rejected,
// and errors name the offending field by JSON pointer.

#include "deltasys/ages.hpp"
#include "deltasys/setworld.hpp"
#include "deltasys/structure.hpp"
#include "deltasys/sunflower_property.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace deltasys::io {

using Json = nlohmann::json;

/// "structure", "labeling", "family", "age", "coloring", "blocks", "plan" or "report".
std::string detect_schema(const Json& doc);

Json to_json(const Structure& s);
Json to_json(const SetLabeling& lab);
Json to_json(const SetFamily& family);
Json to_json(const AgeDescriptor& age);
Json to_json(const Coloring& coloring);
Json to_json(const std::vector<std::pair<std::string, Structure>>& blocks);
Json to_json(const WitnessPlan& plan);
Json to_json(const VerificationReport& report);
Json to_json(const SunflowerWitness& w, const SetFamily& family);
Json atom_to_json(const Atom& a);

Structure structure_from_json(const Json& doc, const std::string& at = "");
SetLabeling labeling_from_json(const Json& doc, const std::string& at = "");
SetFamily family_from_json(const Json& doc, const std::string& at = "");
AgeDescriptor age_from_json(const Json& doc, const std::string& at = "");
Coloring coloring_from_json(const Json& doc, const std::string& at = "");
std::vector<std::pair<std::string, Structure>> blocks_from_json(const Json& doc, const std::string& at = "");
WitnessPlan plan_from_json(const Json& doc, const std::string& at = "");
VerificationReport report_from_json(const Json& doc, const std::string& at = "");

/// Throws Errc::parse_error for unreadable files or malformed JSON.
Json read_file(const std::string& path);
Json parse(const std::string& text);
/// Sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

} // namespace deltasys::io
