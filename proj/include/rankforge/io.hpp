#pragma once

// JSON documents for fields, family specs and constructed families.

#include "rankforge/family.hpp"
#include "rankforge/number_field.hpp"

#include <json.hpp>

#include <string>

namespace rankforge {

using Json = nlohmann::json;

/// {"min_poly": "c0,...,1", "excluded_primes": [...], "assert_irreducible": bool}
NumberField field_from_json(const Json& doc);
Json field_to_json(const NumberField& field);

/// {"field": <field>, "rho": [six elements], "alpha": <element>}
FamilySpec family_spec_from_json(const Json& doc);
Json family_spec_to_json(const FamilySpec& spec);

/// The family spec plus every derived coefficient as exact element strings.
Json family_to_json(const CurveFamily& fam);
/// Accepts a family document or a bare spec; the family is always rebuilt
/// from the spec, and stored coefficients must agree with the rebuild.
CurveFamily family_from_json(const Json& doc);

/// Throws Parse on unreadable files or malformed JSON.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rankforge
