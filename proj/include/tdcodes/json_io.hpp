#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "tdcodes/bounds.hpp"
#include "tdcodes/cyclic.hpp"
#include "tdcodes/distance.hpp"
#include "tdcodes/field.hpp"

namespace tdcodes {

using Json = nlohmann::ordered_json;

/// {"s","m","base_modulus":[bits...],"ext_modulus":[[repr],...]}, both
/// little-endian. Extension coefficients are read either as [repr] or as a
/// bare integer.
Json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const Json& j);
FieldSpec read_field_spec(const std::filesystem::path& path);

Json defining_set_to_json(const DefiningSet& T);

/// Code summary: q, m, n, parity (when known), k, defining set and the
/// generator polynomial as ascending coefficient reprs.
Json code_to_json(const CyclicCode& c, std::optional<Parity> parity, const std::string& variant = "plain");

Json witness_to_json(const APWitness& w);
Json bound_to_json(const BoundReport& r);
Json distance_to_json(const DistanceReport& r);

}  // namespace tdcodes
