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

#include "slowspace/scene/mapping.h"

#include <cmath>

namespace slowspace {

EditResult<WorldPoint> GridToWorld(const GridSpec& grid, Cell cell) {
  if (!InBounds(grid, cell)) return MakeUnexpected(EditError::kOutOfBounds);
  return WorldPoint{(cell.x + 0.5) * grid.cell_size, 0.0,
                    (cell.y + 0.5) * grid.cell_size};
}

EditResult<Cell> CellOfWorld(const GridSpec& grid, const WorldPoint& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.z)) {
    return MakeUnexpected(EditError::kOutOfBounds);
  }
  if (p.x < 0.0 || p.z < 0.0 || p.x >= grid.ExtentX() ||
      p.z >= grid.ExtentZ()) {
    return MakeUnexpected(EditError::kOutOfBounds);
  }
  Cell c{static_cast<std::int32_t>(std::floor(p.x / grid.cell_size)),
         static_cast<std::int32_t>(std::floor(p.z / grid.cell_size))};
  // x < width * cs does not guarantee x / cs < width in floating point.
  if (!InBounds(grid, c)) return MakeUnexpected(EditError::kOutOfBounds);
  return c;
}

}  // namespace slowspace
