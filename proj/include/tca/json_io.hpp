#pragma once

#include <string>

#include <json.hpp>

#include "tca/ideal.hpp"

namespace tca {

using Json = nlohmann::ordered_json;

// {"ring": {"sym": r, "skew": s, "aux": a, "order": "degrevlex"|"lex"},
//  "generators": ["<poly text>", ...]}
Json idealToJson(const Ideal& ideal);
Ideal idealFromJson(const Json& j);
Ideal idealFromFile(const std::string& path);

}  // namespace tca
