// Copyright 2026 The ehrtomo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ehrtomo/body_json.hpp"

#include <fstream>

#include "ehrtomo/error.hpp"

namespace ehrtomo {

namespace {

using nlohmann::json;

Rational rational_of(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw Error(ErrorCode::ParseError, "expected a \"p/q\" string, got " + j.dump());
}

RationalVector vector_of(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array, got " + j.dump());
  RationalVector out;
  for (const auto& e : j) out.push_back(rational_of(e));
  return out;
}

RationalMatrix matrix_of(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of arrays");
  RationalMatrix out;
  for (const auto& row : j) out.push_back(vector_of(row));
  return out;
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

BodySpec body_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "body description must be an object");
  const std::string type = field(j, "type").get<std::string>();
  BodySpec base = [&] {
    if (type == "vpolytope") return BodySpec::vpolytope(matrix_of(field(j, "vertices")));
    if (type == "hpolytope") return BodySpec::hpolytope(matrix_of(field(j, "A")), vector_of(field(j, "b")));
    if (type == "ball") return BodySpec::ball(vector_of(field(j, "center")), rational_of(field(j, "radius")));
    throw Error(ErrorCode::ParseError, "unknown body type \"" + type + "\"");
  }();
  RationalVector t = j.contains("translate") ? vector_of(j.at("translate")) : zeros(base.dim());
  Rational s = j.contains("dilate") ? rational_of(j.at("dilate")) : Rational(1);
  return BodySpec::with_modifiers(base, std::move(t), std::move(s));
}

json body_to_json(const BodySpec& body) {
  json out;
  std::visit(
      [&](const auto& shape) {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, VPolytope>) {
          out["type"] = "vpolytope";
          json verts = json::array();
          for (const auto& v : shape.vertices) verts.push_back(to_json(v));
          out["vertices"] = verts;
        } else if constexpr (std::is_same_v<T, HPolytope>) {
          out["type"] = "hpolytope";
          json rows = json::array();
          for (const auto& r : shape.A) rows.push_back(to_json(r));
          out["A"] = rows;
          out["b"] = to_json(shape.b);
        } else {
          out["type"] = "ball";
          out["center"] = to_json(shape.center);
          out["radius"] = to_string(shape.radius);
        }
      },
      body.shape());
  if (!is_zero(body.translation())) out["translate"] = to_json(body.translation());
  if (body.dilation() != 1) out["dilate"] = to_string(body.dilation());
  return out;
}

BodySpec load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open body file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  try {
    return body_from_json(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace ehrtomo
