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

#ifndef SLOWSPACE_PCG_ECOSYSTEM_H_
#define SLOWSPACE_PCG_ECOSYSTEM_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slowspace/scene/space.h"
#include "slowspace/scene/types.h"
#include "slowspace/util/expected.h"
#include "slowspace/util/json_read.h"

namespace slowspace::pcg {

inline constexpr int kMaxScatterAttempts = 16;
// Limits on catalog files, so a hostile catalog cannot stall an export.
inline constexpr int kMaxPrimaryVariants = 1000;
inline constexpr int kMaxCompanionsPerRule = 1000;
inline constexpr double kMaxCompanionRadius = 20.0;  // 2 x the largest cell

struct CompanionRule {
  std::string mesh_family;
  int min_count = 0;
  int max_count = 0;
  double radius = 1.0;  // meters
  bool forbid_water = false;

  bool operator==(const CompanionRule&) const = default;
};

struct EcosystemTemplate {
  ItemKind kind = ItemKind::kTree;
  int primary_variants = 1;
  std::vector<CompanionRule> companion_rules;

  bool operator==(const EcosystemTemplate&) const = default;
};

using Catalog = std::vector<EcosystemTemplate>;

// One concrete 3D instance, tagged with the item it was expanded from.
struct ExpansionInstance {
  std::string mesh;
  WorldPoint position;
  double yaw_deg = 0.0;
  double scale = 1.0;
  ItemId source_item = 0;

  bool operator==(const ExpansionInstance&) const = default;
};

enum class PcgError : std::uint8_t { kTemplateMismatch, kMissingTemplate };
std::string_view PcgErrorName(PcgError e);

// The built-in version 1 catalog.
const Catalog& DefaultCatalog();

const EcosystemTemplate* FindTemplate(const Catalog& catalog, ItemKind kind);

// Catalog file: a JSON array of
//   {"companion_rules":[{"forbid_water":b,"max_count":n,"mesh_family":s,
//     "min_count":n,"radius":r}],"kind":s,"primary_variants":n}
Expected<Catalog, DecodeError> DecodeCatalog(std::string_view bytes);
std::string EncodeCatalog(const Catalog& catalog);

// Expands one placed item into its ecosystem. Output order: the primary
// mesh, then each rule's companions in declaration order and draw order.
//
// Streams: 0 primary (variant, yaw, scale); 1 companion counts, one draw per
// rule; 2 + rule_index placements. Each companion tries up to 16 polar
// offsets (r, then theta) and is skipped if none lands inside the grid and,
// for forbid_water rules, off water. An accepted companion then draws yaw
// and scale from the same stream.
Expected<std::vector<ExpansionInstance>, PcgError> ExpandItem(
    const Space& space, const PlacedItem& item,
    const EcosystemTemplate& tmpl);

// ExpandItem over all items in ascending id order.
Expected<std::vector<ExpansionInstance>, PcgError> ExpandScene(
    const Space& space, const Catalog& catalog);

}  // namespace slowspace::pcg

#endif  // SLOWSPACE_PCG_ECOSYSTEM_H_
