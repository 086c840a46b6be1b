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

#include "slowspace/util/canonical_json.h"

#include <cassert>
#include <charconv>
#include <cmath>
#include <system_error>

#include "json.hpp"

namespace slowspace {

std::string FormatFixed4(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[400];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::fixed, 4);
  assert(ec == std::errc());
  std::string s(buf, end);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string FormatReal(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0.0";  // also folds -0.0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  assert(ec == std::errc());
  std::string s(buf, end);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void CanonicalJsonWriter::BeforeValue() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!stack_.empty()) {
    Frame& f = stack_.back();
    assert(!f.is_object && "object members need a key");
    if (!f.first) out_.push_back(',');
    f.first = false;
  }
}

void CanonicalJsonWriter::BeginObject() {
  BeforeValue();
  out_.push_back('{');
  stack_.push_back(Frame{true});
}

void CanonicalJsonWriter::EndObject() {
  assert(!stack_.empty() && stack_.back().is_object && !after_key_);
  stack_.pop_back();
  out_.push_back('}');
}

void CanonicalJsonWriter::BeginArray() {
  BeforeValue();
  out_.push_back('[');
  stack_.push_back(Frame{false});
}

void CanonicalJsonWriter::EndArray() {
  assert(!stack_.empty() && !stack_.back().is_object);
  stack_.pop_back();
  out_.push_back(']');
}

void CanonicalJsonWriter::Key(std::string_view key) {
  assert(!stack_.empty() && stack_.back().is_object && !after_key_);
  Frame& f = stack_.back();
  assert((!f.has_key || f.last_key < key) && "keys must ascend");
  f.last_key.assign(key);
  f.has_key = true;
  if (!f.first) out_.push_back(',');
  f.first = false;
  WriteEscaped(key);
  out_.push_back(':');
  after_key_ = true;
}

void CanonicalJsonWriter::WriteEscaped(std::string_view s) {
  out_ += nlohmann::json(std::string(s)).dump(
      -1, ' ', false, nlohmann::json::error_handler_t::replace);
}

void CanonicalJsonWriter::String(std::string_view s) {
  BeforeValue();
  WriteEscaped(s);
}

void CanonicalJsonWriter::Int(std::int64_t v) {
  BeforeValue();
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out_.append(buf, end);
}

void CanonicalJsonWriter::Uint(std::uint64_t v) {
  BeforeValue();
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out_.append(buf, end);
}

void CanonicalJsonWriter::Bool(bool v) {
  BeforeValue();
  out_ += v ? "true" : "false";
}

void CanonicalJsonWriter::Null() {
  BeforeValue();
  out_ += "null";
}

void CanonicalJsonWriter::Fixed4(double v) {
  BeforeValue();
  out_ += FormatFixed4(v);
}

void CanonicalJsonWriter::Real(double v) {
  BeforeValue();
  out_ += FormatReal(v);
}

void CanonicalJsonWriter::Raw(std::string_view json) {
  BeforeValue();
  out_.append(json);
}

}  // namespace slowspace
