#include "cvx/serialize.hpp"

#include "cvx/errors.hpp"

namespace cvx {

using nlohmann::json;

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (!j.is_string()) {
    throw ValidationError("rational must be a string, got " + j.dump());
  }
  return Rat::parse(j.get<std::string>());
}

Coeff coeff_from_json(const json& j) { return Coeff(rat_from_json(j)); }

json value_to_json(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Token:
      return json{{"t", v.token_name()}};
    case Value::Kind::Scalar:
      return json{{"r", rat_to_json(v.scalar_value())}};
    case Value::Kind::Vec: {
      json arr = json::array();
      for (const auto& c : v.vec_coords()) arr.push_back(rat_to_json(c));
      return json{{"v", arr}};
    }
    case Value::Kind::Interval: {
      const auto& iv = v.interval_value();
      return json{{"iv",
                   {{"lo", rat_to_json(iv.lo)},
                    {"hi", rat_to_json(iv.hi)},
                    {"lc", iv.lo_closed},
                    {"hc", iv.hi_closed}}}};
    }
    case Value::Kind::Dist: {
      json arr = json::array();
      for (const auto& [pt, w] : v.dist_value().support) {
        arr.push_back(json::array({value_to_json(pt), w.str()}));
      }
      return json{{"d", arr}};
    }
    case Value::Kind::Set: {
      json arr = json::array();
      for (const auto& m : v.set_members()) arr.push_back(value_to_json(m));
      return json{{"s", arr}};
    }
    case Value::Kind::Tagged: {
      json arr = json::array();
      for (const auto& p : v.tagged_parts()) arr.push_back(value_to_json(p));
      return json{{"g", {{"tag", v.tag()}, {"parts", arr}}}};
    }
  }
  throw ValidationError("unreachable value kind");
}

Value value_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw ValidationError("value must be a single-key object, got " + j.dump());
  }
  const auto it = j.begin();
  const std::string& key = it.key();
  const json& body = it.value();
  if (key == "t") {
    if (!body.is_string()) throw ValidationError("token name must be a string");
    return Value::token(body.get<std::string>());
  }
  if (key == "r") return Value::scalar(rat_from_json(body));
  if (key == "v") {
    if (!body.is_array()) throw ValidationError("vector body must be an array");
    std::vector<Rat> cs;
    for (const auto& c : body) cs.push_back(rat_from_json(c));
    return Value::vec(std::move(cs));
  }
  if (key == "iv") {
    if (!body.is_object() || !body.contains("lo") || !body.contains("hi")) {
      throw ValidationError("interval body needs lo and hi");
    }
    bool lc = body.value("lc", true);
    bool hc = body.value("hc", true);
    return Value::interval(interval_make(rat_from_json(body.at("lo")),
                                         rat_from_json(body.at("hi")), lc, hc));
  }
  if (key == "d") {
    if (!body.is_array()) throw ValidationError("dist body must be an array");
    Dist d;
    for (const auto& entry : body) {
      if (!entry.is_array() || entry.size() != 2) {
        throw ValidationError("dist entry must be [point, weight]");
      }
      d.support.emplace_back(value_from_json(entry[0]),
                             coeff_from_json(entry[1]));
    }
    std::sort(d.support.begin(), d.support.end(),
              [](const auto& a, const auto& b) {
                return Value::cmp(a.first, b.first) < 0;
              });
    Rat total(0);
    for (std::size_t i = 0; i < d.support.size(); ++i) {
      if (d.support[i].second.is_zero()) {
        throw ValidationError("dist entry with zero weight");
      }
      if (i && d.support[i].first == d.support[i - 1].first) {
        throw ValidationError("dist with repeated point");
      }
      total += d.support[i].second.value();
    }
    if (total != Rat(1)) {
      throw ValidationError("dist weights sum to " + total.str());
    }
    return Value::dist(std::move(d));
  }
  if (key == "s") {
    if (!body.is_array()) throw ValidationError("set body must be an array");
    std::vector<Value> ms;
    for (const auto& m : body) ms.push_back(value_from_json(m));
    return Value::set(std::move(ms));
  }
  if (key == "g") {
    if (!body.is_object() || !body.contains("tag") || !body.contains("parts")) {
      throw ValidationError("tagged body needs tag and parts");
    }
    std::vector<Value> ps;
    for (const auto& p : body.at("parts")) ps.push_back(value_from_json(p));
    return Value::tagged(body.at("tag").get<std::string>(), std::move(ps));
  }
  throw ValidationError("unknown value key '" + key + "'");
}

std::string value_to_string(const Value& v) { return value_to_json(v).dump(); }

Value value_from_string(const std::string& text) {
  return value_from_json(json_parse(text));
}

json json_parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("json syntax: ") + e.what());
  }
}

}  // namespace cvx
