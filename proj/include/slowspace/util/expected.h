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

#ifndef SLOWSPACE_UTIL_EXPECTED_H_
#define SLOWSPACE_UTIL_EXPECTED_H_

#include <cassert>
#include <type_traits>
#include <utility>
#include <variant>

namespace slowspace {

// Wrapper that tags an error value so Expected<T, E> stays unambiguous even
// when T and E are convertible to each other.
template <typename E>
struct Unexpected {
  E error;
};

template <typename E>
Unexpected<std::decay_t<E>> MakeUnexpected(E&& e) {
  return {std::forward<E>(e)};
}

// Minimal value-or-error holder (the toolchain predates std::expected).
template <typename T, typename E>
class Expected {
 public:
  using value_type = T;
  using error_type = E;

  Expected(const T& v) : storage_(std::in_place_index<0>, v) {}
  Expected(T&& v) : storage_(std::in_place_index<0>, std::move(v)) {}
  template <typename G>
  Expected(Unexpected<G> u)
      : storage_(std::in_place_index<1>, std::move(u.error)) {}

  bool has_value() const { return storage_.index() == 0; }
  explicit operator bool() const { return has_value(); }

  T& value() & {
    assert(has_value());
    return std::get<0>(storage_);
  }
  const T& value() const& {
    assert(has_value());
    return std::get<0>(storage_);
  }
  T&& value() && {
    assert(has_value());
    return std::get<0>(std::move(storage_));
  }
  const E& error() const {
    assert(!has_value());
    return std::get<1>(storage_);
  }

  T& operator*() & { return value(); }
  const T& operator*() const& { return value(); }
  T&& operator*() && { return std::move(*this).value(); }
  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }

 private:
  std::variant<T, E> storage_;
};

// Status-only form: success carries no value.
template <typename E>
class Expected<void, E> {
 public:
  using error_type = E;

  Expected() = default;
  template <typename G>
  Expected(Unexpected<G> u) : error_(std::move(u.error)), ok_(false) {}

  bool has_value() const { return ok_; }
  explicit operator bool() const { return ok_; }
  const E& error() const {
    assert(!ok_);
    return error_;
  }

 private:
  E error_{};
  bool ok_ = true;
};

}  // namespace slowspace

#endif  // SLOWSPACE_UTIL_EXPECTED_H_
