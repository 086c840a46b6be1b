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

#include "slowspace/sync/replica.h"

#include <algorithm>
#include <utility>

namespace slowspace::sync {

std::string_view ReplicaErrorName(ReplicaError e) {
  switch (e) {
    case ReplicaError::kSequenceGap:
      return "SequenceGap";
    case ReplicaError::kDesync:
      return "Desync";
  }
  return "Unknown";
}

ClientReplica::ClientReplica(const Welcome& welcome)
    : client_id_(welcome.client_id),
      confirmed_(welcome.snapshot),
      view_(welcome.snapshot) {}

Expected<std::vector<SubmitOp>, LocalRejected> ClientReplica::OnLocal(
    const EditOp& op) {
  Space next = view_;
  auto applied = Apply(next, op);
  if (!applied) return MakeUnexpected(LocalRejected{applied.error()});
  view_ = std::move(next);
  pending_.push_back(PendingOp{next_client_op_id_++, op,
                               applied->assigned_item_id, false});
  return Flush();
}

Expected<std::vector<SubmitOp>, ReplicaError> ClientReplica::OnServer(
    const Envelope& envelope) {
  if (const auto* m = std::get_if<OpApplied>(&envelope)) return OnApplied(*m);
  if (const auto* m = std::get_if<Rejected>(&envelope)) return OnRejected(*m);
  if (const auto* m = std::get_if<Welcome>(&envelope)) return OnWelcome(*m);
  if (const auto* m = std::get_if<PresenceBroadcast>(&envelope)) {
    presence_[m->client_id] = m->cell;
  } else if (const auto* m = std::get_if<ResidueDelta>(&envelope)) {
    if (InBounds(confirmed_.grid, m->cell)) {
      const std::size_t i = CellIndex(confirmed_.grid, m->cell);
      confirmed_.residue[i] = m->wear;
      view_.residue[i] = m->wear;
    }
  }
  return std::vector<SubmitOp>{};
}

std::vector<SubmitOp> ClientReplica::OnWelcome(const Welcome& welcome) {
  // Rejoin: nothing in flight survives the old connection, so every pending
  // op is replayed over the fresh snapshot and resent.
  client_id_ = welcome.client_id;
  confirmed_ = welcome.snapshot;
  for (PendingOp& p : pending_) p.sent = false;
  Rebuild({});
  return Flush();
}

Expected<std::vector<SubmitOp>, ReplicaError> ClientReplica::OnApplied(
    const OpApplied& m) {
  if (m.seq != confirmed_.op_seq + 1) {
    return MakeUnexpected(ReplicaError::kSequenceGap);
  }
  Space next = confirmed_;
  auto applied = Apply(next, m.op);
  if (!applied || applied->assigned_item_id != m.assigned_item_id) {
    return MakeUnexpected(ReplicaError::kDesync);
  }
  next.op_seq = m.seq;
  confirmed_ = std::move(next);

  std::map<ItemId, ItemId> remap;
  if (m.origin_client == client_id_) {
    auto it = std::find_if(pending_.begin(), pending_.end(),
                           [&](const PendingOp& p) {
                             return p.sent && p.client_op_id == m.client_op_id;
                           });
    if (it != pending_.end()) {
      if (it->predicted_item_id && m.assigned_item_id &&
          *it->predicted_item_id != *m.assigned_item_id) {
        remap[*it->predicted_item_id] = *m.assigned_item_id;
      }
      pending_.erase(it);
    }
    // An echo without a pending entry is an op that was dropped locally but
    // still succeeded on the server; it is just another ordered op.
  }
  Rebuild(std::move(remap));
  return Flush();
}

std::vector<SubmitOp> ClientReplica::OnRejected(const Rejected& m) {
  auto it = std::find_if(pending_.begin(), pending_.end(),
                         [&](const PendingOp& p) {
                           return p.sent && p.client_op_id == m.client_op_id;
                         });
  if (it == pending_.end()) return {};
  std::map<ItemId, ItemId> remap;
  if (it->predicted_item_id) remap[*it->predicted_item_id] = 0;
  pending_.erase(it);
  Rebuild(std::move(remap));
  return Flush();
}

void ClientReplica::Rebuild(std::map<ItemId, ItemId> remap) {
  Space view = confirmed_;
  std::deque<PendingOp> kept;
  for (PendingOp& p : pending_) {
    if (auto ref = ReferencedItem(p.op)) {
      auto r = remap.find(*ref);
      if (r != remap.end()) {
        if (r->second == 0) continue;
        p.op = WithReferencedItem(p.op, r->second);
      }
    }
    auto applied = Apply(view, p.op);
    if (!applied) {
      if (p.predicted_item_id) remap[*p.predicted_item_id] = 0;
      continue;
    }
    if (p.predicted_item_id && applied->assigned_item_id != p.predicted_item_id) {
      remap[*p.predicted_item_id] = *applied->assigned_item_id;
      p.predicted_item_id = applied->assigned_item_id;
    }
    kept.push_back(std::move(p));
  }
  pending_ = std::move(kept);
  view_ = std::move(view);
}

std::vector<SubmitOp> ClientReplica::Flush() {
  std::vector<SubmitOp> out;
  for (PendingOp& p : pending_) {
    if (p.sent) continue;
    if (auto ref = ReferencedItem(p.op); ref && *ref >= confirmed_.next_item_id) {
      break;  // refers to a placement still awaiting its id
    }
    p.sent = true;
    out.push_back(SubmitOp{p.client_op_id, p.op});
  }
  return out;
}

}  // namespace slowspace::sync
