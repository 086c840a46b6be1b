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

#include "slowspace/materializer/scene_description.h"

#include "slowspace/util/canonical_json.h"
#include "slowspace/util/file_io.h"

namespace slowspace::materializer {

Lighting LightingFor(TimeOfDay t) {
  switch (t) {
    case TimeOfDay::kMorning:
      return {t, 25.0, 110.0, 0.45};
    case TimeOfDay::kDusk:
      return {t, 8.0, 260.0, 0.30};
    case TimeOfDay::kNight:
      return {t, -10.0, 0.0, 0.10};
  }
  return {};
}

WallSegment WallFor(const GridSpec& grid, const WallEdge& edge) {
  const double cs = grid.cell_size;
  WallSegment w;
  w.length = cs;
  if (edge.orientation == Orientation::kH) {
    w.center = {(edge.x + 0.5) * cs, kWallHeight / 2, edge.y * cs};
    w.yaw_deg = 0.0;
  } else {
    w.center = {edge.x * cs, kWallHeight / 2, (edge.y + 0.5) * cs};
    w.yaw_deg = 90.0;
  }
  return w;
}

Expected<SceneDescription, pcg::PcgError> Materialize(
    const Space& space, const pcg::Catalog& catalog) {
  auto instances = pcg::ExpandScene(space, catalog);
  if (!instances) return MakeUnexpected(instances.error());
  SceneDescription scene;
  scene.extent_width = space.grid.ExtentX();
  scene.extent_depth = space.grid.ExtentZ();
  scene.grid_width = space.grid.width;
  scene.grid_height = space.grid.height;
  scene.tiles.reserve(space.terrain.size());
  for (std::size_t i = 0; i < space.terrain.size(); ++i) {
    scene.tiles.push_back(Tile{space.terrain[i], RoundWear(space.residue[i])});
  }
  for (const WallEdge& e : space.walls) scene.walls.push_back(WallFor(space.grid, e));
  scene.instances = std::move(*instances);
  scene.lighting = LightingFor(space.time_of_day);
  return scene;
}

namespace {

void WritePoint(CanonicalJsonWriter& w, const WorldPoint& p) {
  w.BeginArray();
  w.Fixed4(p.x);
  w.Fixed4(p.y);
  w.Fixed4(p.z);
  w.EndArray();
}

}  // namespace

std::string EncodeScene(const SceneDescription& scene) {
  CanonicalJsonWriter w;
  w.BeginObject();
  w.Key("extent");
  w.BeginObject();
  w.Key("depth");
  w.Fixed4(scene.extent_depth);
  w.Key("width");
  w.Fixed4(scene.extent_width);
  w.EndObject();
  w.Key("format");
  w.String("slowspace-scene");
  w.Key("grid");
  w.BeginObject();
  w.Key("height");
  w.Int(scene.grid_height);
  w.Key("width");
  w.Int(scene.grid_width);
  w.EndObject();

  w.Key("instances");
  w.BeginArray();
  for (const pcg::ExpansionInstance& inst : scene.instances) {
    w.BeginObject();
    w.Key("mesh");
    w.String(inst.mesh);
    w.Key("position");
    WritePoint(w, inst.position);
    w.Key("scale");
    w.Fixed4(inst.scale);
    w.Key("source_item");
    w.Uint(inst.source_item);
    w.Key("yaw_deg");
    w.Fixed4(inst.yaw_deg);
    w.EndObject();
  }
  w.EndArray();

  w.Key("lighting");
  w.BeginObject();
  w.Key("ambient");
  w.Fixed4(scene.lighting.ambient);
  w.Key("preset");
  w.String(TimeOfDayName(scene.lighting.preset));
  w.Key("sun_azimuth_deg");
  w.Fixed4(scene.lighting.sun_azimuth_deg);
  w.Key("sun_elevation_deg");
  w.Fixed4(scene.lighting.sun_elevation_deg);
  w.EndObject();

  w.Key("tiles");
  w.BeginArray();
  for (const Tile& t : scene.tiles) {
    w.BeginObject();
    w.Key("terrain");
    w.String(TerrainCode(t.terrain));
    w.Key("wear");
    w.Fixed4(t.wear);
    w.EndObject();
  }
  w.EndArray();

  w.Key("version");
  w.Int(1);

  w.Key("walls");
  w.BeginArray();
  for (const WallSegment& s : scene.walls) {
    w.BeginObject();
    w.Key("center");
    WritePoint(w, s.center);
    w.Key("height");
    w.Fixed4(s.height);
    w.Key("length");
    w.Fixed4(s.length);
    w.Key("thickness");
    w.Fixed4(s.thickness);
    w.Key("yaw_deg");
    w.Fixed4(s.yaw_deg);
    w.EndObject();
  }
  w.EndArray();
  w.EndObject();
  return w.Take();
}

Expected<void, ExportError> ExportScene(const Space& space,
                                        const pcg::Catalog& catalog,
                                        const std::filesystem::path& path) {
  auto scene = Materialize(space, catalog);
  if (!scene) {
    return MakeUnexpected(ExportError{ExportErrorCode::kMissingTemplate,
                                      std::string(pcg::PcgErrorName(scene.error()))});
  }
  auto written = WriteFileAtomic(path, EncodeScene(*scene));
  if (!written) {
    return MakeUnexpected(ExportError{ExportErrorCode::kIoError, written.error().detail});
  }
  return {};
}

}  // namespace slowspace::materializer
