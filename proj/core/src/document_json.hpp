#pragma once

#include <string>

#include "json.hpp"
#include "liecone/document.hpp"

namespace liecone::detail {

// where prefixes error messages, e.g. "entries[3]".
AlgebraDocument document_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json document_to_json(const AlgebraDocument& doc);

// Accepts a string ("n", "n/d") or a JSON integer.
Scalar scalar_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace liecone::detail
