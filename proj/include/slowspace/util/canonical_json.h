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

#ifndef SLOWSPACE_UTIL_CANONICAL_JSON_H_
#define SLOWSPACE_UTIL_CANONICAL_JSON_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slowspace {

// Streaming writer for the canonical JSON form shared by space files, wire
// envelopes and scene exports: no whitespace, object keys emitted in
// ascending byte order (checked), UTF-8 strings escaped the way nlohmann/json
// escapes them.
//
// Callers are responsible for emitting keys in order; an out-of-order key is
// a programming error and aborts in debug builds.
class CanonicalJsonWriter {
 public:
  void BeginObject();
  void EndObject();
  void BeginArray();
  void EndArray();
  void Key(std::string_view key);

  void String(std::string_view s);
  void Int(std::int64_t v);
  void Uint(std::uint64_t v);
  void Bool(bool v);
  void Null();
  // Exactly four digits after the decimal point; "-0.0000" is normalized.
  void Fixed4(double v);
  // Shortest decimal that round-trips, always containing '.' or an exponent.
  void Real(double v);

  // Splices an already-canonical JSON value.
  void Raw(std::string_view json);

  const std::string& str() const { return out_; }
  std::string Take() { return std::move(out_); }

 private:
  struct Frame {
    bool is_object;
    bool first = true;
    std::string last_key;
    bool has_key = false;
  };
  void BeforeValue();
  void WriteEscaped(std::string_view s);

  std::string out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

std::string FormatFixed4(double v);
std::string FormatReal(double v);

}  // namespace slowspace

#endif  // SLOWSPACE_UTIL_CANONICAL_JSON_H_
