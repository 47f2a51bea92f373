#include "cvx/descriptor.hpp"

#include <map>
#include <utility>

#include "cvx/dist_ops.hpp"
#include "cvx/errors.hpp"
#include "cvx/fixtures.hpp"
#include "cvx/geometric.hpp"
#include "cvx/mixed.hpp"
#include "cvx/semilattice.hpp"
#include "cvx/serialize.hpp"

namespace cvx {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ValidationError(std::string("descriptor missing field: ") + name);
  }
  return *it;
}

std::size_t size_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ValidationError(std::string("descriptor field ") + name +
                          " must be a non-negative integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

Value element_from_json(const json& j) {
  if (j.is_string()) return Value::token(j.get<std::string>());
  return value_from_json(j);
}

FiniteSemilattice semilattice_from_json(const json& j) {
  const json& elems = field(j, "elements");
  const json& meet = field(j, "meet");
  if (!elems.is_array() || !meet.is_array()) {
    throw ValidationError("semilattice elements and meet must be arrays");
  }
  std::vector<Value> elements;
  for (const auto& e : elems) elements.push_back(element_from_json(e));
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : meet) {
    if (!row.is_array()) {
      throw ValidationError("semilattice meet rows must be arrays");
    }
    std::vector<std::size_t> out;
    for (const auto& cell : row) {
      if (!cell.is_number_integer() || cell.get<long long>() < 0) {
        throw ValidationError(
            "semilattice meet entries must be element indices");
      }
      out.push_back(static_cast<std::size_t>(cell.get<long long>()));
    }
    table.push_back(std::move(out));
  }
  return FiniteSemilattice::make(std::move(elements), std::move(table));
}

std::vector<Rat> rat_row(const json& j) {
  if (!j.is_array()) {
    throw ValidationError("transport rows must be arrays of rationals");
  }
  std::vector<Rat> out;
  for (const auto& cell : j) out.push_back(rat_from_json(cell));
  return out;
}

Transport affine_transport(const json& j) {
  std::vector<std::vector<Rat>> matrix;
  for (const auto& row : field(j, "matrix")) matrix.push_back(rat_row(row));
  std::vector<Rat> offset = rat_row(field(j, "offset"));
  if (matrix.size() != offset.size()) {
    throw ValidationError("transport matrix and offset sizes disagree");
  }
  return [matrix, offset](const Value& v) {
    const auto& coords = v.vec_coords();
    std::vector<Rat> out;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      if (matrix[i].size() != coords.size()) {
        throw DomainError("transport applied to a vector of the wrong size");
      }
      Rat acc = offset[i];
      for (std::size_t k = 0; k < coords.size(); ++k) {
        acc = acc + matrix[i][k] * coords[k];
      }
      out.push_back(acc);
    }
    return Value::vec(std::move(out));
  };
}

SpaceHandle fibered_from_json(const json& j) {
  FiniteSemilattice base = semilattice_from_json(field(j, "base"));
  const json& fibs = field(j, "fibers");
  if (!fibs.is_array()) {
    throw ValidationError("fibered fibers must be an array of descriptors");
  }
  std::vector<SpaceHandle> fibers;
  for (const auto& f : fibs) fibers.push_back(parse_space_descriptor_json(f));
  std::map<std::pair<std::size_t, std::size_t>, Transport> transports;
  for (const auto& t : field(j, "transports")) {
    std::size_t lower = size_field(t, "lower");
    std::size_t upper = size_field(t, "upper");
    transports[{lower, upper}] = affine_transport(t);
  }
  return fibered_space_make(std::move(base), std::move(fibers), transports);
}

}  // namespace

SpaceHandle parse_space_descriptor_json(const json& j) {
  if (!j.is_object()) {
    throw ValidationError("descriptor must be a JSON object");
  }
  const json& k = field(j, "kind");
  if (!k.is_string()) {
    throw ValidationError("descriptor field kind must be a string");
  }
  const std::string kind = k.get<std::string>();
  if (kind == "vector") return vector_space(size_field(j, "dim"));
  if (kind == "simplex") return simplex_space(size_field(j, "vertices"));
  if (kind == "free") {
    const json& carrier = field(j, "carrier");
    if (!carrier.is_array()) {
      throw ValidationError("free carrier must be an array");
    }
    std::vector<Value> points;
    for (const auto& p : carrier) points.push_back(element_from_json(p));
    return free_space(std::move(points));
  }
  if (kind == "semilattice") {
    return semilattice_space(semilattice_from_json(j));
  }
  if (kind == "fibered") return fibered_from_json(j);
  if (kind == "face-classifier") return face_classifier();
  if (kind == "adjoin-infinity") {
    return adjoin_infinity(parse_space_descriptor_json(field(j, "space")));
  }
  if (kind == "lottery") return lottery_space();
  if (kind == "intervals") return interval_space();
  if (kind == "fixture") {
    const json& name = field(j, "name");
    if (!name.is_string()) {
      throw ValidationError("fixture name must be a string");
    }
    return fixture_space(name.get<std::string>());
  }
  throw ValidationError("unknown descriptor kind: " + kind);
}

SpaceHandle parse_space_descriptor(const std::string& text) {
  return parse_space_descriptor_json(json_parse(text));
}

std::vector<std::string> descriptor_kinds() {
  return {"vector",          "simplex", "free",
          "semilattice",     "fibered", "face-classifier",
          "adjoin-infinity", "lottery", "intervals",
          "fixture"};
}

}  // namespace cvx
