// Copyright 2026 The symfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMFIELD_JSON_HPP_
#define SYMFIELD_JSON_HPP_

#include <json.hpp>

namespace symfield {

// Insertion-ordered so emitted reports are stable and readable.
using Json = nlohmann::ordered_json;

}  // namespace symfield

#endif  // SYMFIELD_JSON_HPP_
