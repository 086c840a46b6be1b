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

#ifndef SLOWSPACE_UTIL_FILE_IO_H_
#define SLOWSPACE_UTIL_FILE_IO_H_

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include "slowspace/util/expected.h"

namespace slowspace {

struct FileError {
  bool not_found = false;
  std::string detail;
};

Expected<std::string, FileError> ReadFile(const std::filesystem::path& path);

// Writes `bytes` to a sibling temp file and renames it over `path`, so readers
// see either the old file or the new one. `before_rename` runs between the
// two steps; tests use it to simulate a crash there.
Expected<void, FileError> WriteFileAtomic(
    const std::filesystem::path& path, std::string_view bytes,
    const std::function<void()>& before_rename = {});

}  // namespace slowspace

#endif  // SLOWSPACE_UTIL_FILE_IO_H_
