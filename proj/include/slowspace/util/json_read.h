// Copyright 2026 The Slow Space Authors
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

#ifndef SLOWSPACE_UTIL_JSON_READ_H_
#define SLOWSPACE_UTIL_JSON_READ_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "slowspace/util/expected.h"

namespace slowspace {

// Failure to turn bytes into a typed value. `position` is the byte offset of
// a syntax error, or 0 when the bytes parsed as JSON but violated the schema
// (in which case `reason` names the offending field path).
struct DecodeError {
  std::size_t position = 0;
  std::string reason;
};

namespace json_read {

using Json = nlohmann::json;

// Thrown by the helpers below and converted to DecodeError at the decode
// boundary; never escapes a public decode function.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses without throwing. Rejects invalid UTF-8 and trailing garbage.
Expected<Json, DecodeError> Parse(std::string_view bytes);

// Requires `obj` to be an object whose key set is exactly `required` plus
// any subset of `optional`.
void ExpectObject(const Json& obj, std::string_view where,
                  std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {});

const Json& Field(const Json& obj, std::string_view key);
std::string GetString(const Json& v, std::string_view where);
std::uint64_t GetU64(const Json& v, std::string_view where);
std::int32_t GetI32(const Json& v, std::string_view where);
double GetReal(const Json& v, std::string_view where);
bool GetBool(const Json& v, std::string_view where);
// Array of exactly `n` elements.
const Json& GetArray(const Json& v, std::string_view where,
                     std::size_t n = static_cast<std::size_t>(-1));

[[noreturn]] void Fail(std::string_view where, std::string_view what);

}  // namespace json_read
}  // namespace slowspace

#endif  // SLOWSPACE_UTIL_JSON_READ_H_
