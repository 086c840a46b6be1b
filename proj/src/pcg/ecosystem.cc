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

#include "slowspace/pcg/ecosystem.h"

#include <cmath>
#include <numbers>

#include "slowspace/pcg/splitmix.h"
#include "slowspace/scene/canonical.h"
#include "slowspace/scene/mapping.h"
#include "slowspace/util/canonical_json.h"

namespace slowspace::pcg {

std::string_view PcgErrorName(PcgError e) {
  switch (e) {
    case PcgError::kTemplateMismatch:
      return "TemplateMismatch";
    case PcgError::kMissingTemplate:
      return "MissingTemplate";
  }
  return "Unknown";
}

const Catalog& DefaultCatalog() {
  static const Catalog* const catalog = new Catalog{
      {ItemKind::kTree,
       4,
       {{"grass_tuft", 5, 12, 2.0, true}, {"mushroom", 0, 3, 1.5, true}}},
      {ItemKind::kBoulder, 10, {{"pebble", 0, 4, 1.0, false}}},
      {ItemKind::kBench, 2, {}},
      {ItemKind::kFlowerPatch, 3, {{"flower", 8, 20, 1.5, true}}},
      {ItemKind::kStatue, 2, {}},
      {ItemKind::kWell, 1, {}},
  };
  return *catalog;
}

const EcosystemTemplate* FindTemplate(const Catalog& catalog, ItemKind kind) {
  for (const EcosystemTemplate& t : catalog) {
    if (t.kind == kind) return &t;
  }
  return nullptr;
}

Expected<Catalog, DecodeError> DecodeCatalog(std::string_view bytes) {
  using namespace json_read;
  auto parsed = Parse(bytes);
  if (!parsed) return MakeUnexpected(parsed.error());
  try {
    Catalog catalog;
    for (const Json& t : GetArray(*parsed, "catalog")) {
      ExpectObject(t, "template", {"kind", "primary_variants", "companion_rules"});
      EcosystemTemplate tmpl;
      tmpl.kind = ItemKindFromJson(Field(t, "kind"), "template.kind");
      if (FindTemplate(catalog, tmpl.kind) != nullptr) {
        Fail("template.kind", "duplicate kind");
      }
      tmpl.primary_variants =
          GetI32(Field(t, "primary_variants"), "template.primary_variants");
      if (tmpl.primary_variants < 1 || tmpl.primary_variants > kMaxPrimaryVariants) {
        Fail("template.primary_variants", "out of range");
      }
      for (const Json& r : GetArray(Field(t, "companion_rules"),
                                    "template.companion_rules")) {
        ExpectObject(r, "rule",
                     {"mesh_family", "min_count", "max_count", "radius",
                      "forbid_water"});
        CompanionRule rule;
        rule.mesh_family = GetString(Field(r, "mesh_family"), "rule.mesh_family");
        rule.min_count = GetI32(Field(r, "min_count"), "rule.min_count");
        rule.max_count = GetI32(Field(r, "max_count"), "rule.max_count");
        rule.radius = GetReal(Field(r, "radius"), "rule.radius");
        rule.forbid_water = GetBool(Field(r, "forbid_water"), "rule.forbid_water");
        if (rule.mesh_family.empty()) Fail("rule.mesh_family", "empty");
        if (rule.min_count < 0 || rule.min_count > rule.max_count) {
          Fail("rule", "need 0 <= min_count <= max_count");
        }
        if (rule.max_count > kMaxCompanionsPerRule) {
          Fail("rule.max_count", "too large");
        }
        if (rule.radius < 0.0 || rule.radius > kMaxCompanionRadius) {
          Fail("rule.radius", "out of range");
        }
        tmpl.companion_rules.push_back(std::move(rule));
      }
      catalog.push_back(std::move(tmpl));
    }
    return catalog;
  } catch (const SchemaError& e) {
    return MakeUnexpected(DecodeError{0, e.what()});
  }
}

std::string EncodeCatalog(const Catalog& catalog) {
  CanonicalJsonWriter w;
  w.BeginArray();
  for (const EcosystemTemplate& t : catalog) {
    w.BeginObject();
    w.Key("companion_rules");
    w.BeginArray();
    for (const CompanionRule& r : t.companion_rules) {
      w.BeginObject();
      w.Key("forbid_water");
      w.Bool(r.forbid_water);
      w.Key("max_count");
      w.Int(r.max_count);
      w.Key("mesh_family");
      w.String(r.mesh_family);
      w.Key("min_count");
      w.Int(r.min_count);
      w.Key("radius");
      w.Real(r.radius);
      w.EndObject();
    }
    w.EndArray();
    w.Key("kind");
    w.String(ItemKindName(t.kind));
    w.Key("primary_variants");
    w.Int(t.primary_variants);
    w.EndObject();
  }
  w.EndArray();
  return w.Take();
}

namespace {

double DrawYaw(SplitMix64& rng) { return rng.NextUnit() * 360.0; }
double DrawScale(SplitMix64& rng) { return 0.75 + rng.NextUnit() * 0.5; }

}  // namespace

Expected<std::vector<ExpansionInstance>, PcgError> ExpandItem(
    const Space& space, const PlacedItem& item,
    const EcosystemTemplate& tmpl) {
  if (tmpl.kind != item.kind) return MakeUnexpected(PcgError::kTemplateMismatch);
  std::vector<ExpansionInstance> out;
  auto center = GridToWorld(space.grid, item.cell);
  // Items of a validated space are always in bounds.
  if (!center) return out;
  const std::string kind_name(ItemKindName(item.kind));

  SplitMix64 primary = ItemRng(space.seed, item.id, 0);
  ExpansionInstance head;
  std::uint64_t variant =
      primary.NextBelow(static_cast<std::uint64_t>(tmpl.primary_variants));
  head.mesh = kind_name + "/variant_" + std::to_string(variant);
  head.position = *center;
  head.yaw_deg = DrawYaw(primary);
  head.scale = DrawScale(primary);
  head.source_item = item.id;
  out.push_back(std::move(head));

  SplitMix64 counts = ItemRng(space.seed, item.id, 1);
  for (std::size_t rule_index = 0; rule_index < tmpl.companion_rules.size();
       ++rule_index) {
    const CompanionRule& rule = tmpl.companion_rules[rule_index];
    const std::int64_t count = counts.UniformInt(rule.min_count, rule.max_count);
    SplitMix64 place = ItemRng(space.seed, item.id, 2 + rule_index);
    const std::string mesh = kind_name + "/" + rule.mesh_family;
    for (std::int64_t n = 0; n < count; ++n) {
      for (int attempt = 0; attempt < kMaxScatterAttempts; ++attempt) {
        const double r = place.NextUnit() * rule.radius;
        const double theta = place.NextUnit() * 2.0 * std::numbers::pi;
        WorldPoint p{center->x + r * std::cos(theta), 0.0,
                     center->z + r * std::sin(theta)};
        auto cell = CellOfWorld(space.grid, p);
        if (!cell) continue;
        if (rule.forbid_water && space.TerrainAt(*cell) == Terrain::kWater) {
          continue;
        }
        ExpansionInstance inst;
        inst.mesh = mesh;
        inst.position = p;
        inst.yaw_deg = DrawYaw(place);
        inst.scale = DrawScale(place);
        inst.source_item = item.id;
        out.push_back(std::move(inst));
        break;
      }
    }
  }
  return out;
}

Expected<std::vector<ExpansionInstance>, PcgError> ExpandScene(
    const Space& space, const Catalog& catalog) {
  for (ItemKind kind : kAllItemKinds) {
    if (FindTemplate(catalog, kind) == nullptr) {
      return MakeUnexpected(PcgError::kMissingTemplate);
    }
  }
  std::vector<ExpansionInstance> out;
  for (const PlacedItem& item : space.items) {
    auto part = ExpandItem(space, item, *FindTemplate(catalog, item.kind));
    if (!part) return MakeUnexpected(part.error());
    for (ExpansionInstance& inst : *part) out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace slowspace::pcg
