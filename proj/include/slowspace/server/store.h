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

#ifndef SLOWSPACE_SERVER_STORE_H_
#define SLOWSPACE_SERVER_STORE_H_

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "slowspace/scene/space.h"
#include "slowspace/server/session.h"
#include "slowspace/util/expected.h"

namespace slowspace::server {

enum class StoreErrorCode : std::uint8_t {
  kNotFound,
  kCorruptFile,
  kIoError,
  kInvalidId,
};

struct StoreError {
  StoreErrorCode code = StoreErrorCode::kIoError;
  std::string detail;
  // For kCorruptFile: decode failure or every ValidateSpace violation.
  std::vector<std::string> violations;
};
std::string_view StoreErrorName(StoreErrorCode code);

// Ids double as file names: 1-64 characters from [A-Za-z0-9_-].
bool IsValidSpaceId(std::string_view id);
std::string GenerateSpaceId();

// Reads and validates a space file.
Expected<Space, StoreError> LoadSpaceFile(const std::filesystem::path& path);

// A directory of space files, <id>.json each.
class SpaceStore {
 public:
  explicit SpaceStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path PathFor(std::string_view space_id) const;

  Expected<Space, StoreError> Load(std::string_view space_id) const;
  Expected<void, StoreError> Save(const Space& space) const;
  bool Exists(std::string_view space_id) const;
  // (id, name) of every loadable space, sorted by id.
  std::vector<std::pair<std::string, std::string>> List() const;

  void set_before_rename_hook(std::function<void()> hook) {
    before_rename_ = std::move(hook);
  }

 private:
  std::filesystem::path dir_;
  std::function<void()> before_rename_;
};

Expected<Session, StoreError> OpenSession(const SpaceStore& store,
                                          std::string_view space_id);
// Persists the session's current space and clears its dirty flag.
Expected<void, StoreError> SaveSession(Session& session,
                                       const SpaceStore& store);

}  // namespace slowspace::server

#endif  // SLOWSPACE_SERVER_STORE_H_
