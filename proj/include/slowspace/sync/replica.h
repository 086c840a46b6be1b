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

#ifndef SLOWSPACE_SYNC_REPLICA_H_
#define SLOWSPACE_SYNC_REPLICA_H_

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "slowspace/scene/space.h"
#include "slowspace/sync/edit_op.h"
#include "slowspace/sync/envelope.h"

namespace slowspace::sync {

enum class ReplicaError : std::uint8_t {
  // OpApplied.seq skipped ahead; the client must rejoin for a fresh snapshot.
  kSequenceGap,
  // A server-ordered op failed against the confirmed state, or the server
  // issued a different item id than the confirmed state predicts. Same remedy.
  kDesync,
};
std::string_view ReplicaErrorName(ReplicaError e);

struct LocalRejected {
  EditError reason;
};

struct PendingOp {
  ClientOpId client_op_id = 0;
  EditOp op;
  // For PlaceItem: the id this op produced in the current view.
  std::optional<ItemId> predicted_item_id;
  // False while held back because the op references an item whose PlaceItem
  // the server has not confirmed yet.
  bool sent = false;
};

// Client-side replica of one space: a confirmed state that is a pure fold of
// server-ordered OpApplied messages over the Welcome snapshot, plus a queue of
// optimistic local ops replayed on top to form the view.
//
// Item ids for local placements are predicted from the view. An op that
// refers to a predicted id is held locally, not sent, until the server
// confirms the placement; at that point (or whenever the view is rebuilt)
// references are rewritten to the id the placement actually received. Ops on
// the wire therefore only name ids the server has issued.
//
// Single-owner: not thread-safe.
class ClientReplica {
 public:
  explicit ClientReplica(const Welcome& welcome);

  ClientId client_id() const { return client_id_; }
  const Space& confirmed() const { return confirmed_; }
  const Space& view() const { return view_; }
  const std::deque<PendingOp>& pending() const { return pending_; }
  const std::map<ClientId, Cell>& presence() const { return presence_; }

  // Applies `op` to the view and queues it. Returns the submissions to send
  // now; empty if the op is held behind an unconfirmed placement.
  Expected<std::vector<SubmitOp>, LocalRejected> OnLocal(const EditOp& op);

  // Feeds one server message. Returns submissions released by it.
  Expected<std::vector<SubmitOp>, ReplicaError> OnServer(
      const Envelope& envelope);

 private:
  std::vector<SubmitOp> OnWelcome(const Welcome& welcome);
  Expected<std::vector<SubmitOp>, ReplicaError> OnApplied(const OpApplied& m);
  std::vector<SubmitOp> OnRejected(const Rejected& m);

  // view = confirmed + pending, dropping pending ops that now fail and
  // rewriting item references through `remap` (old view id -> new id, 0 for
  // an item that no longer exists).
  void Rebuild(std::map<ItemId, ItemId> remap);
  // Marks the longest sendable prefix of unsent ops as sent.
  std::vector<SubmitOp> Flush();

  ClientId client_id_ = 0;
  Space confirmed_;
  Space view_;
  std::deque<PendingOp> pending_;
  ClientOpId next_client_op_id_ = 1;
  std::map<ClientId, Cell> presence_;
};

}  // namespace slowspace::sync

#endif  // SLOWSPACE_SYNC_REPLICA_H_
