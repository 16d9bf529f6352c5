#pragma once

#include "cartan/char_classes.hpp"
#include "cartan/errors.hpp"
#include "cartan/models.hpp"
#include "cartan/relations.hpp"

#include <json.hpp>

#include <string>

namespace cartan {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where);

// [[generator names], tau exponent, "p/q"] triples in canonical monomial order.
Json to_json(const Form& f, const std::vector<std::string>& names);
Json to_json(const Relation& r);
Json to_json(const PrimitiveResult& r, const std::vector<std::string>& names);

Json model_to_json(const ModelBundle& b);
// Throws SchemaError naming the offending field.
ModelBundle model_from_json(const Json& j);

// Canonical text: one line per bracket entry and per representation.
std::string dump_model(const ModelBundle& b);
ModelBundle parse_model_text(const std::string& text);
ModelBundle parse_model_file(const std::string& path);

}  // namespace cartan
