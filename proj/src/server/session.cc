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

#include "slowspace/server/session.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "slowspace/scene/mapping.h"

namespace slowspace::server {

Session::Session(Space space) : base_(space), space_(std::move(space)) {}

sync::ClientId Session::Join(std::string name, std::vector<Delivery>& out) {
  const sync::ClientId id = next_client_id_++;
  members_[id] = Member{std::move(name), std::nullopt, std::nullopt};
  out.push_back(Delivery{id, sync::Welcome{id, space_, space_.op_seq}});
  return id;
}

void Session::Leave(sync::ClientId client) { members_.erase(client); }

bool Session::IsSubscribed(sync::ClientId client) const {
  return members_.contains(client);
}

std::vector<std::pair<sync::ClientId, std::string>> Session::Subscribers()
    const {
  std::vector<std::pair<sync::ClientId, std::string>> out;
  for (const auto& [id, m] : members_) out.emplace_back(id, m.name);
  return out;
}

void Session::Broadcast(const sync::Envelope& e,
                        std::vector<Delivery>& out) const {
  for (const auto& [id, m] : members_) out.push_back(Delivery{id, e});
}

void Session::HandleSubmit(sync::ClientId client, const sync::SubmitOp& submit,
                           std::vector<Delivery>& out) {
  auto member = members_.find(client);
  if (member == members_.end()) return;
  if (member->second.last_client_op_id &&
      submit.client_op_id <= *member->second.last_client_op_id) {
    out.push_back(Delivery{
        client, sync::Rejected{submit.client_op_id, "ClientOpIdNotIncreasing"}});
    return;
  }
  member->second.last_client_op_id = submit.client_op_id;

  // sync::Apply is atomic, so a failed op leaves space_ as it was.
  auto applied = sync::Apply(space_, submit.op);
  if (!applied) {
    out.push_back(Delivery{
        client, sync::Rejected{submit.client_op_id,
                               std::string(EditErrorName(applied.error()))}});
    return;
  }
  const Seq seq = ++space_.op_seq;
  op_log_.push_back(LogEntry{seq, client, submit.op});
  dirty_ = true;
  Broadcast(sync::OpApplied{seq, client, submit.client_op_id, submit.op,
                            applied->assigned_item_id},
            out);
}

void Session::RecordPresence(sync::ClientId client,
                             const sync::PresenceReport& report,
                             const ResiduePolicy& policy,
                             std::vector<Delivery>& out) {
  auto member = members_.find(client);
  if (member == members_.end()) return;
  if (!std::isfinite(report.dwell_s) || report.dwell_s < 0.0) return;
  auto cell = CellOfWorld(space_.grid, report.position);
  if (!cell) return;

  if (member->second.last_cell != *cell) {
    member->second.last_cell = *cell;
    for (const auto& [id, m] : members_) {
      if (id != client) {
        out.push_back(Delivery{id, sync::PresenceBroadcast{client, *cell}});
      }
    }
  }

  double& wear = space_.residue[CellIndex(space_.grid, *cell)];
  const std::int64_t before = QuantizeWear(wear);
  wear = std::min(policy.cap, wear + report.dwell_s * policy.wear_rate);
  if (QuantizeWear(wear) != before) {
    dirty_ = true;
    Broadcast(sync::ResidueDelta{*cell, RoundWear(wear)}, out);
  }
}

}  // namespace slowspace::server
