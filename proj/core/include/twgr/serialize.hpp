#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "twgr/cocycle.hpp"
#include "twgr/derivation.hpp"
#include "twgr/field.hpp"
#include "twgr/group.hpp"
#include "twgr/matrix.hpp"
#include "twgr/ring.hpp"

namespace twgr {

using json = nlohmann::json;

// All *_from_json functions throw InvalidInput on malformed documents.

json field_to_json(const Field& f);  // {"p":3,"m":2,"modulus":[1,0,1]}
FieldPtr field_from_json(const json& j);

/// One line per row, entries in the field's digit notation.
std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(FieldPtr field, std::string_view text);

/// {"field":{...},"rows":r,"cols":c,"entries":[...]} with row-major strings.
json matrix_to_json(const Matrix& m);
/// Uses the embedded field unless `field` is given.
Matrix matrix_from_json(const json& j, FieldPtr field = nullptr);

/// {"kind":"dihedral","n":N}, {"kind":"abelian","orders":[...]}, or
/// {"kind":"table","mul":[[...]],"generators":[...],"relators":[[...]]}
/// with letters encoded as +-(i+1). Table groups may carry "names".
json group_to_json(const Group& g);
GroupPtr group_from_json(const json& j);

/// {"kind":"trivial"}, {"kind":"dihedral_alpha1|2|3"} or
/// {"kind":"table","entries":[[...]]} with field element strings.
json cocycle_to_json(const Cocycle& c);
Cocycle cocycle_from_json(const json& j, GroupPtr group, FieldPtr field);

/// {element name: element string}, zero coefficients omitted.
json ring_elem_to_json(const RingElem& a);
RingElem ring_elem_from_json(const json& j, const RingPtr& ring);

/// {"images": {element name: ring element}}.
json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const json& j, const RingPtr& ring);

/// {"f": [ring element per generator]}.
json generator_map_to_json(const GeneratorMap& f);
GeneratorMap generator_map_from_json(const json& j, const RingPtr& ring);

/// Parses a document, mapping parse errors to InvalidInput.
json parse_json(std::string_view text);
json read_json_file(const std::string& path);

}  // namespace twgr
