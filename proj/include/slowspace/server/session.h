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

#ifndef SLOWSPACE_SERVER_SESSION_H_
#define SLOWSPACE_SERVER_SESSION_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slowspace/scene/space.h"
#include "slowspace/server/op_log.h"
#include "slowspace/sync/envelope.h"

namespace slowspace::server {

struct ResiduePolicy {
  double wear_rate = 0.001;  // wear per second of presence
  double cap = 1.0;

  bool IsValid() const { return wear_rate > 0.0 && cap > 0.0 && cap <= 1.0; }
};

// One message for one subscriber. Broadcasts expand to one Delivery per
// subscriber, in subscription order.
struct Delivery {
  sync::ClientId to = 0;
  sync::Envelope envelope;
};

// The single ordering point for one space. Pure state machine: no I/O and no
// locking. The host feeds it one event at a time (its apply loop) and hands
// the returned deliveries to per-connection FIFO queues.
//
// Invariants: space().op_seq == base().op_seq + op_log().size(), and
// ReplayLog(base(), op_log()) reproduces space() except for residue, which is
// not an edit op.
class Session {
 public:
  explicit Session(Space space);

  const Space& space() const { return space_; }
  const Space& base() const { return base_; }
  const std::vector<LogEntry>& op_log() const { return op_log_; }

  bool dirty() const { return dirty_; }
  void MarkSaved() { dirty_ = false; }

  sync::ClientId Join(std::string name, std::vector<Delivery>& out);
  void Leave(sync::ClientId client);
  bool IsSubscribed(sync::ClientId client) const;
  std::vector<std::pair<sync::ClientId, std::string>> Subscribers() const;

  // Orders and applies one submission. Success broadcasts OpApplied to every
  // subscriber (origin included); failure unicasts Rejected and changes
  // nothing.
  void HandleSubmit(sync::ClientId client, const sync::SubmitOp& submit,
                    std::vector<Delivery>& out);

  // Accumulates wear where the client stands. Reports outside the grid, with
  // a negative dwell, or from unknown clients are ignored.
  void RecordPresence(sync::ClientId client,
                      const sync::PresenceReport& report,
                      const ResiduePolicy& policy, std::vector<Delivery>& out);

 private:
  void Broadcast(const sync::Envelope& e, std::vector<Delivery>& out) const;

  Space base_;
  Space space_;
  std::vector<LogEntry> op_log_;
  bool dirty_ = false;
  sync::ClientId next_client_id_ = 1;
  struct Member {
    std::string name;
    std::optional<sync::ClientOpId> last_client_op_id;
    std::optional<Cell> last_cell;
  };
  std::map<sync::ClientId, Member> members_;
};

}  // namespace slowspace::server

#endif  // SLOWSPACE_SERVER_SESSION_H_
