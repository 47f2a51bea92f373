#pragma once

#include <string>

#include <json.hpp>

#include "cvx/value.hpp"

namespace cvx {

// JSON forms, one single-key wrapper object per kind:
//   token     {"t": "a"}
//   scalar    {"r": "1/2"}
//   vector    {"v": ["1/2", "3"]}
//   interval  {"iv": {"lo": "0", "hi": "1", "lc": true, "hc": false}}
//   dist      {"d": [[<point>, "1/2"], ...]}
//   set       {"s": [<member>, ...]}
//   tagged    {"g": {"tag": "stake", "parts": [...]}}
// Rationals are always strings ("p" or "p/q"), never JSON numbers, so the
// round trip stays exact.
nlohmann::json value_to_json(const Value& v);
Value value_from_json(const nlohmann::json& j);

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);
Coeff coeff_from_json(const nlohmann::json& j);

std::string value_to_string(const Value& v);
Value value_from_string(const std::string& text);

// Parses text as JSON, converting syntax errors into ValidationError
// with the byte position preserved in the message.
nlohmann::json json_parse(const std::string& text);

}  // namespace cvx
