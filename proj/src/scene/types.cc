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

#include "slowspace/scene/types.h"

namespace slowspace {

std::string_view TerrainCode(Terrain t) {
  switch (t) {
    case Terrain::kGrass:
      return "g";
    case Terrain::kRock:
      return "r";
    case Terrain::kWater:
      return "w";
  }
  return "g";
}

std::optional<Terrain> TerrainFromCode(std::string_view code) {
  if (code == "g") return Terrain::kGrass;
  if (code == "r") return Terrain::kRock;
  if (code == "w") return Terrain::kWater;
  return std::nullopt;
}

std::string_view TimeOfDayName(TimeOfDay t) {
  switch (t) {
    case TimeOfDay::kMorning:
      return "morning";
    case TimeOfDay::kDusk:
      return "dusk";
    case TimeOfDay::kNight:
      return "night";
  }
  return "morning";
}

std::optional<TimeOfDay> TimeOfDayFromName(std::string_view name) {
  if (name == "morning") return TimeOfDay::kMorning;
  if (name == "dusk") return TimeOfDay::kDusk;
  if (name == "night") return TimeOfDay::kNight;
  return std::nullopt;
}

std::string_view ItemKindName(ItemKind k) {
  switch (k) {
    case ItemKind::kTree:
      return "tree";
    case ItemKind::kBoulder:
      return "boulder";
    case ItemKind::kBench:
      return "bench";
    case ItemKind::kFlowerPatch:
      return "flower_patch";
    case ItemKind::kStatue:
      return "statue";
    case ItemKind::kWell:
      return "well";
  }
  return "tree";
}

std::optional<ItemKind> ItemKindFromName(std::string_view name) {
  for (ItemKind k : kAllItemKinds) {
    if (ItemKindName(k) == name) return k;
  }
  return std::nullopt;
}

}  // namespace slowspace
