#pragma once

#include "gptlab/errors.hpp"
#include "gptlab/gpt_core.hpp"

#include <json.hpp>

#include <string>

namespace gptlab {

/// Exact rational from a JSON value. Integers and "p/q" / decimal strings
/// are always accepted; JSON floats only when `allow_float` is set, and then
/// they convert through their shortest decimal form.
Rational rational_from_json(const nlohmann::json& value, bool allow_float);

/// Canonical encoding: plain JSON integer when it fits, "p/q" string otherwise.
nlohmann::ordered_json rational_to_json(const Rational& r);

/// Space document: {"type":"polytope","vertices":[...]} /
/// {"type":"ball","dim":2|3,"center":[...],"radius":...} /
/// {"type":"generator","name":...,"params":{...}} with generator names
/// simplex, cube, polygon, disk, ball. Polytope coordinates reject JSON
/// floats; ball center and radius accept them.
StateSpace parse_space_document(const nlohmann::json& doc);

StateSpace parse_space_document(const std::string& text);

/// Canonical document of the concrete space (generators normalize away).
nlohmann::ordered_json space_to_document(const StateSpace& space);

/// Point from "1/2,0,1"-style text or a JSON array literal.
Vec parse_point_text(const std::string& text);

nlohmann::ordered_json point_to_json(const Vec& point);

}  // namespace gptlab
