#pragma once

#include <string>
#include <vector>

#include "cvx/space.hpp"
#include <json.hpp>

namespace cvx {

// Build a space from a JSON descriptor object. The object carries a
// "kind" plus kind-specific parameters:
//
//   {"kind":"vector","dim":2}
//   {"kind":"simplex","vertices":3}
//   {"kind":"free","carrier":[{"t":"a"},{"t":"b"}]}
//   {"kind":"semilattice","elements":["i","f"],"meet":[[0,0],[0,1]]}
//   {"kind":"fibered","base":{...},"fibers":[...],"transports":[...]}
//   {"kind":"face-classifier"}
//   {"kind":"adjoin-infinity","space":{...}}
//   {"kind":"lottery"}
//   {"kind":"intervals"}
//   {"kind":"fixture","name":"corrupt-commutativity"}
//
// Fibered transports are exact affine maps on vector fibers, one per
// covering pair: {"lower":0,"upper":1,"matrix":[["1/2"]],"offset":["0"]}.
// Malformed text raises ValidationError with a position; well-formed
// text with bad contents raises ValidationError naming the field or the
// violated invariant.
SpaceHandle parse_space_descriptor(const std::string& text);
SpaceHandle parse_space_descriptor_json(const nlohmann::json& j);

std::vector<std::string> descriptor_kinds();

}  // namespace cvx
