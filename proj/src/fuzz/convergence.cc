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

#include "slowspace/fuzz/convergence.h"

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <utility>

#include "slowspace/pcg/splitmix.h"
#include "slowspace/scene/canonical.h"
#include "slowspace/server/session.h"
#include "slowspace/sync/codec.h"
#include "slowspace/sync/replica.h"

namespace slowspace::fuzz {
namespace {

using sync::ClientId;
using sync::EditOp;
using sync::Envelope;

struct SimClient {
  ClientId id = 0;
  std::optional<sync::ClientReplica> replica;
  std::deque<std::string> to_server;
  std::deque<std::string> to_client;
  // client_op_id -> id predicted at OnLocal time, for counting rewrites.
  std::map<sync::ClientOpId, ItemId> predicted;
};

class Simulation {
 public:
  Simulation(const FuzzOptions& options, FuzzReport& report)
      : options_(options),
        report_(report),
        rng_(pcg::MixKey(options.seed, 0xF022, 0)),
        session_(*NewSpace("fuzz", "fuzz", options.seed, options.grid)) {
    report_.base = session_.space();
    clients_.resize(static_cast<std::size_t>(options.clients));
    for (SimClient& c : clients_) Connect(c);
  }

  bool Run() {
    while (report_.generated < options_.ops) {
      if (!Step()) return false;
    }
    // Drain: deliveries can release held submissions, so loop until quiet.
    while (AnyQueued()) {
      if (!DeliverOne()) return false;
    }
    return true;
  }

  bool Check() {
    const std::uint64_t server_hash = SceneHash(session_.space());
    report_.server_hash = server_hash;
    report_.final_space = session_.space();
    report_.log = session_.op_log();
    auto replay = server::ReplayLog(report_.base, session_.op_log());
    if (!replay) {
      return Fail("replay failed at seq " + std::to_string(replay.error().seq));
    }
    report_.replay_hash = SceneHash(*replay);
    if (report_.replay_hash != server_hash) return Fail("replay hash differs");
    for (const SimClient& c : clients_) {
      const std::uint64_t h = SceneHash(c.replica->confirmed());
      report_.replica_hashes.push_back(h);
      if (!c.replica->pending().empty()) {
        return Fail("client " + std::to_string(c.id) + " has pending ops");
      }
      if (h != server_hash || SceneHash(c.replica->view()) != server_hash) {
        return Fail("client " + std::to_string(c.id) + " diverged");
      }
    }
    return true;
  }

 private:
  bool Fail(std::string why) {
    report_.failure = std::move(why);
    return false;
  }

  void Connect(SimClient& c) {
    std::vector<server::Delivery> out;
    c.id = session_.Join("client", out);
    Route(out);
  }

  void Route(const std::vector<server::Delivery>& out) {
    for (const server::Delivery& d : out) {
      for (SimClient& c : clients_) {
        if (c.id == d.to) c.to_client.push_back(sync::Encode(d.envelope));
      }
    }
  }

  bool AnyQueued() const {
    for (const SimClient& c : clients_) {
      if (!c.to_server.empty() || !c.to_client.empty()) return true;
    }
    return false;
  }

  SimClient& PickClient() {
    return clients_[rng_.NextBelow(clients_.size())];
  }

  bool Step() {
    const double roll = rng_.NextUnit();
    if (roll < options_.reconnect_probability) {
      Reconnect(PickClient());
      return true;
    }
    if (roll < 0.4 || !AnyQueued()) return Generate(PickClient());
    return DeliverOne();
  }

  void Reconnect(SimClient& c) {
    // Whatever was in flight on the old connection is lost.
    session_.Leave(c.id);
    c.to_server.clear();
    c.to_client.clear();
    ++report_.reconnects;
    Connect(c);
  }

  bool DeliverOne() {
    std::vector<std::pair<SimClient*, bool>> ready;  // (client, to_server)
    for (SimClient& c : clients_) {
      if (!c.to_server.empty()) ready.emplace_back(&c, true);
      if (!c.to_client.empty()) ready.emplace_back(&c, false);
    }
    if (ready.empty()) return true;
    auto [c, to_server] = ready[rng_.NextBelow(ready.size())];
    if (to_server) {
      std::string bytes = std::move(c->to_server.front());
      c->to_server.pop_front();
      auto env = sync::Decode(bytes);
      if (!env) return Fail("server could not decode: " + env.error().reason);
      const auto* submit = std::get_if<sync::SubmitOp>(&*env);
      if (submit == nullptr) return Fail("unexpected client message");
      std::vector<server::Delivery> out;
      session_.HandleSubmit(c->id, *submit, out);
      Route(out);
      return true;
    }
    std::string bytes = std::move(c->to_client.front());
    c->to_client.pop_front();
    auto env = sync::Decode(bytes);
    if (!env) return Fail("client could not decode: " + env.error().reason);
    if (const auto* welcome = std::get_if<sync::Welcome>(&*env)) {
      if (!c->replica) {
        c->replica.emplace(*welcome);
        return true;
      }
    }
    if (!c->replica) return Fail("message before welcome");
    if (const auto* applied = std::get_if<sync::OpApplied>(&*env)) {
      if (applied->origin_client == c->id && applied->assigned_item_id) {
        auto it = c->predicted.find(applied->client_op_id);
        if (it != c->predicted.end() && it->second != *applied->assigned_item_id) {
          ++report_.id_rewrites;
        }
      }
    }
    if (std::holds_alternative<sync::Rejected>(*env)) ++report_.server_rejected;
    auto released = c->replica->OnServer(*env);
    if (!released) {
      return Fail("client " + std::to_string(c->id) + ": " +
                  std::string(sync::ReplicaErrorName(released.error())));
    }
    return Send(*c, *released);
  }

  bool Send(SimClient& c, const std::vector<sync::SubmitOp>& submits) {
    for (const sync::SubmitOp& s : submits) {
      auto ref = sync::ReferencedItem(s.op);
      if (ref && *ref >= c.replica->confirmed().next_item_id) {
        return Fail("submission names an unissued item id");
      }
      c.to_server.push_back(sync::Encode(s));
    }
    return true;
  }

  Cell RandomCell(const GridSpec& g) {
    return Cell{static_cast<std::int32_t>(rng_.NextBelow(g.width)),
                static_cast<std::int32_t>(rng_.NextBelow(g.height))};
  }

  EditOp RandomOp(const Space& view) {
    const GridSpec& g = view.grid;
    const double roll = rng_.NextUnit();
    if (roll < 0.20) {
      return sync::SetTerrainOp{RandomCell(g),
                                static_cast<Terrain>(rng_.NextBelow(3))};
    }
    if (roll < 0.35) {
      WallEdge e;
      e.orientation = rng_.NextBelow(2) == 0 ? Orientation::kH : Orientation::kV;
      e.x = static_cast<std::int32_t>(
          rng_.NextBelow(g.width + (e.orientation == Orientation::kV ? 1 : 0)));
      e.y = static_cast<std::int32_t>(
          rng_.NextBelow(g.height + (e.orientation == Orientation::kH ? 1 : 0)));
      return sync::SetWallOp{e, !view.walls.contains(e)};
    }
    if (roll < 0.60 || view.items.empty()) {
      return sync::PlaceItemOp{kAllItemKinds[rng_.NextBelow(kAllItemKinds.size())],
                               RandomCell(g)};
    }
    const ItemId target = view.items[rng_.NextBelow(view.items.size())].id;
    if (roll < 0.80) return sync::MoveItemOp{target, RandomCell(g)};
    if (roll < 0.90) return sync::RemoveItemOp{target};
    if (roll < 0.95) {
      return sync::SetTimeOfDayOp{static_cast<TimeOfDay>(rng_.NextBelow(3))};
    }
    // Invalid against the view: refused locally, never sent.
    if (rng_.NextBelow(2) == 0) {
      return sync::SetTerrainOp{Cell{g.width, 0}, Terrain::kRock};
    }
    return sync::RemoveItemOp{view.next_item_id + 100};
  }

  bool Generate(SimClient& c) {
    ++report_.generated;
    if (!c.replica) return true;  // still waiting for Welcome
    EditOp op = RandomOp(c.replica->view());
    auto submits = c.replica->OnLocal(op);
    if (!submits) {
      ++report_.local_rejected;
      return true;
    }
    const sync::PendingOp& queued = c.replica->pending().back();
    if (queued.predicted_item_id) {
      c.predicted[queued.client_op_id] = *queued.predicted_item_id;
    }
    return Send(c, *submits);
  }

  const FuzzOptions& options_;
  FuzzReport& report_;
  pcg::SplitMix64 rng_;
  server::Session session_;
  std::vector<SimClient> clients_;
};

}  // namespace

FuzzReport RunConvergenceFuzz(const FuzzOptions& options) {
  FuzzReport report;
  if (options.clients < 1 || options.ops < 0 || !options.grid.IsValid()) {
    report.failure = "invalid fuzz options";
    return report;
  }
  Simulation sim(options, report);
  report.converged = sim.Run() && sim.Check();
  return report;
}

}  // namespace slowspace::fuzz
