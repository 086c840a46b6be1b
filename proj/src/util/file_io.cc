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

#include "slowspace/util/file_io.h"

#include <fstream>
#include <sstream>
#include <system_error>

namespace slowspace {

namespace fs = std::filesystem;

Expected<std::string, FileError> ReadFile(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    return MakeUnexpected(FileError{true, path.string() + ": not found"});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return MakeUnexpected(FileError{false, path.string() + ": cannot open"});
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    return MakeUnexpected(FileError{false, path.string() + ": read failed"});
  }
  return buf.str();
}

Expected<void, FileError> WriteFileAtomic(
    const fs::path& path, std::string_view bytes,
    const std::function<void()>& before_rename) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return MakeUnexpected(FileError{false, tmp.string() + ": cannot create"});
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) return MakeUnexpected(FileError{false, tmp.string() + ": write failed"});
  }
  if (before_rename) before_rename();
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) return MakeUnexpected(FileError{false, path.string() + ": " + ec.message()});
  return {};
}

}  // namespace slowspace
