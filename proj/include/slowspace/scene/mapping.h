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

#ifndef SLOWSPACE_SCENE_MAPPING_H_
#define SLOWSPACE_SCENE_MAPPING_H_

#include "slowspace/scene/space.h"
#include "slowspace/scene/types.h"

namespace slowspace {

// Center of `cell` on the ground plane.
EditResult<WorldPoint> GridToWorld(const GridSpec& grid, Cell cell);

// Cell containing `p`; the extent is half-open, so the far edges map to
// OutOfBounds. The y coordinate is ignored.
EditResult<Cell> CellOfWorld(const GridSpec& grid, const WorldPoint& p);

}  // namespace slowspace

#endif  // SLOWSPACE_SCENE_MAPPING_H_
