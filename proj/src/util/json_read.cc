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

#include "slowspace/util/json_read.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace slowspace::json_read {

Expected<Json, DecodeError> Parse(std::string_view bytes) {
  try {
    return Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    return MakeUnexpected(DecodeError{e.byte, e.what()});
  } catch (const std::exception& e) {
    return MakeUnexpected(DecodeError{0, e.what()});
  }
}

void Fail(std::string_view where, std::string_view what) {
  std::string msg(where);
  msg += ": ";
  msg += what;
  throw SchemaError(msg);
}

void ExpectObject(const Json& obj, std::string_view where,
                  std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional) {
  if (!obj.is_object()) Fail(where, "expected object");
  for (std::string_view key : required) {
    if (!obj.contains(key)) Fail(where, "missing field \"" + std::string(key) + "\"");
  }
  for (const auto& [key, value] : obj.items()) {
    auto known = [&](std::initializer_list<std::string_view> set) {
      return std::find(set.begin(), set.end(), key) != set.end();
    };
    if (!known(required) && !known(optional)) {
      Fail(where, "unknown field \"" + key + "\"");
    }
  }
}

const Json& Field(const Json& obj, std::string_view key) {
  return *obj.find(key);
}

std::string GetString(const Json& v, std::string_view where) {
  if (!v.is_string()) Fail(where, "expected string");
  return v.get<std::string>();
}

std::uint64_t GetU64(const Json& v, std::string_view where) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) Fail(where, "expected non-negative integer");
  Fail(where, "expected integer");
}

std::int32_t GetI32(const Json& v, std::string_view where) {
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
      Fail(where, "integer out of range");
    }
    return static_cast<std::int32_t>(u);
  }
  if (v.is_number_integer()) {
    auto i = v.get<std::int64_t>();
    if (i < std::numeric_limits<std::int32_t>::min()) {
      Fail(where, "integer out of range");
    }
    return static_cast<std::int32_t>(i);
  }
  Fail(where, "expected integer");
}

double GetReal(const Json& v, std::string_view where) {
  if (!v.is_number()) Fail(where, "expected number");
  double d = v.get<double>();
  if (!std::isfinite(d)) Fail(where, "number not finite");
  return d;
}

bool GetBool(const Json& v, std::string_view where) {
  if (!v.is_boolean()) Fail(where, "expected boolean");
  return v.get<bool>();
}

const Json& GetArray(const Json& v, std::string_view where, std::size_t n) {
  if (!v.is_array()) Fail(where, "expected array");
  if (n != static_cast<std::size_t>(-1) && v.size() != n) {
    Fail(where, "expected array of " + std::to_string(n) + " elements");
  }
  return v;
}

}  // namespace slowspace::json_read
