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

#pragma once

#include <string>

#include "ehrtomo/bodies.hpp"
#include "json.hpp"

namespace ehrtomo {

/// JSON body description. Rationals are "p/q" strings (JSON integers are
/// accepted on input; floats are rejected):
///   {"type":"vpolytope","vertices":[["0","0"],["1","0"],["0","1"]]}
///   {"type":"hpolytope","A":[["1","0"],...],"b":["1",...]}
///   {"type":"ball","center":["0","0"],"radius":"1"}
/// Optional "translate":[...] and "dilate":"p/q" describe
/// dilate * shape + translate.
BodySpec body_from_json(const nlohmann::json& j);
nlohmann::json body_to_json(const BodySpec& body);
BodySpec load_body(const std::string& path);

}  // namespace ehrtomo
