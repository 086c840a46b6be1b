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

#include "slowspace/server/store.h"

#include <algorithm>
#include <random>
#include <system_error>

#include "slowspace/scene/canonical.h"
#include "slowspace/util/file_io.h"

namespace slowspace::server {

namespace fs = std::filesystem;

std::string_view StoreErrorName(StoreErrorCode code) {
  switch (code) {
    case StoreErrorCode::kNotFound:
      return "NotFound";
    case StoreErrorCode::kCorruptFile:
      return "CorruptFile";
    case StoreErrorCode::kIoError:
      return "IoError";
    case StoreErrorCode::kInvalidId:
      return "InvalidId";
  }
  return "Unknown";
}

bool IsValidSpaceId(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-';
  });
}

std::string GenerateSpaceId() {
  static constexpr char kHex[] = "0123456789abcdef";
  std::random_device rd;
  std::uint64_t bits = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::string id = "s";
  for (int i = 0; i < 12; ++i) {
    id.push_back(kHex[bits & 0xF]);
    bits >>= 4;
  }
  return id;
}

namespace {

StoreError FromFileError(const FileError& e) {
  return StoreError{e.not_found ? StoreErrorCode::kNotFound
                                : StoreErrorCode::kIoError,
                    e.detail, {}};
}

}  // namespace

Expected<Space, StoreError> LoadSpaceFile(const fs::path& path) {
  auto bytes = ReadFile(path);
  if (!bytes) return MakeUnexpected(FromFileError(bytes.error()));
  auto space = DecodeSpace(*bytes);
  if (!space) {
    return MakeUnexpected(StoreError{StoreErrorCode::kCorruptFile,
                                     path.string() + ": undecodable",
                                     {space.error().reason}});
  }
  auto violations = ValidateSpace(*space);
  if (!violations.empty()) {
    return MakeUnexpected(StoreError{StoreErrorCode::kCorruptFile,
                                     path.string() + ": invalid space",
                                     std::move(violations)});
  }
  return std::move(*space);
}

SpaceStore::SpaceStore(fs::path dir) : dir_(std::move(dir)) {}

fs::path SpaceStore::PathFor(std::string_view space_id) const {
  return dir_ / (std::string(space_id) + ".json");
}

bool SpaceStore::Exists(std::string_view space_id) const {
  std::error_code ec;
  return IsValidSpaceId(space_id) && fs::is_regular_file(PathFor(space_id), ec);
}

Expected<Space, StoreError> SpaceStore::Load(std::string_view space_id) const {
  if (!IsValidSpaceId(space_id)) {
    return MakeUnexpected(StoreError{StoreErrorCode::kNotFound,
                                     "invalid space id", {}});
  }
  auto space = LoadSpaceFile(PathFor(space_id));
  if (space && space->space_id != space_id) {
    return MakeUnexpected(StoreError{StoreErrorCode::kCorruptFile,
                                     "space_id does not match file name",
                                     {"space_id mismatch"}});
  }
  return space;
}

Expected<void, StoreError> SpaceStore::Save(const Space& space) const {
  if (!IsValidSpaceId(space.space_id)) {
    return MakeUnexpected(StoreError{StoreErrorCode::kInvalidId,
                                     "invalid space id", {}});
  }
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) {
    return MakeUnexpected(
        StoreError{StoreErrorCode::kIoError, dir_.string() + ": " + ec.message(), {}});
  }
  auto written = WriteFileAtomic(PathFor(space.space_id),
                                 CanonicalBytes(space), before_rename_);
  if (!written) return MakeUnexpected(FromFileError(written.error()));
  return {};
}

std::vector<std::pair<std::string, std::string>> SpaceStore::List() const {
  std::vector<std::pair<std::string, std::string>> out;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    const std::string id = entry.path().stem().string();
    if (!IsValidSpaceId(id)) continue;
    if (auto space = Load(id)) out.emplace_back(id, space->name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Expected<Session, StoreError> OpenSession(const SpaceStore& store,
                                          std::string_view space_id) {
  auto space = store.Load(space_id);
  if (!space) return MakeUnexpected(space.error());
  return Session(std::move(*space));
}

Expected<void, StoreError> SaveSession(Session& session,
                                       const SpaceStore& store) {
  auto saved = store.Save(session.space());
  if (saved) session.MarkSaved();
  return saved;
}

}  // namespace slowspace::server
