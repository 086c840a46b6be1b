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

#ifndef SLOWSPACE_MATERIALIZER_SCENE_DESCRIPTION_H_
#define SLOWSPACE_MATERIALIZER_SCENE_DESCRIPTION_H_

#include <filesystem>
#include <string>
#include <vector>

#include "slowspace/pcg/ecosystem.h"
#include "slowspace/scene/space.h"
#include "slowspace/util/expected.h"

namespace slowspace::materializer {

inline constexpr double kWallHeight = 2.5;
inline constexpr double kWallThickness = 0.2;

struct Tile {
  Terrain terrain = Terrain::kGrass;
  double wear = 0.0;
  bool operator==(const Tile&) const = default;
};

struct WallSegment {
  WorldPoint center;
  double length = 0.0;
  double yaw_deg = 0.0;
  double height = kWallHeight;
  double thickness = kWallThickness;
  bool operator==(const WallSegment&) const = default;
};

struct Lighting {
  TimeOfDay preset = TimeOfDay::kMorning;
  double sun_elevation_deg = 0.0;
  double sun_azimuth_deg = 0.0;
  double ambient = 0.0;
  bool operator==(const Lighting&) const = default;
};

// Renderer-agnostic description of the 3D scene for one space.
struct SceneDescription {
  double extent_width = 0.0;  // meters along x
  double extent_depth = 0.0;  // meters along z
  int grid_width = 0;
  int grid_height = 0;
  std::vector<Tile> tiles;    // row-major, one per cell
  std::vector<WallSegment> walls;
  std::vector<pcg::ExpansionInstance> instances;
  Lighting lighting;
};

Lighting LightingFor(TimeOfDay t);

// Walls sit centered on their grid line: H edge (x, y) at
// ((x + 0.5) cs, h/2, y cs) with yaw 0, V edge at (x cs, h/2, (y + 0.5) cs)
// with yaw 90.
WallSegment WallFor(const GridSpec& grid, const WallEdge& edge);

Expected<SceneDescription, pcg::PcgError> Materialize(
    const Space& space, const pcg::Catalog& catalog);

// Canonical JSON, same rules as the space file. All reals are written with
// exactly four decimals so output is stable across platforms' libm.
std::string EncodeScene(const SceneDescription& scene);

enum class ExportErrorCode : std::uint8_t { kMissingTemplate, kIoError };
struct ExportError {
  ExportErrorCode code;
  std::string detail;
};

Expected<void, ExportError> ExportScene(const Space& space,
                                        const pcg::Catalog& catalog,
                                        const std::filesystem::path& path);

}  // namespace slowspace::materializer

#endif  // SLOWSPACE_MATERIALIZER_SCENE_DESCRIPTION_H_
