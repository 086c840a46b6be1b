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

#ifndef SLOWSPACE_FUZZ_CONVERGENCE_H_
#define SLOWSPACE_FUZZ_CONVERGENCE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "slowspace/scene/space.h"
#include "slowspace/server/op_log.h"

namespace slowspace::fuzz {

struct FuzzOptions {
  int clients = 3;
  int ops = 1000;
  std::uint64_t seed = 7;
  // Small on purpose: crowding produces CellFull and NoSuchItem conflicts.
  GridSpec grid{6, 6, 2.0};
  // Chance per scheduling step that a client drops its connection and
  // rejoins with a fresh snapshot.
  double reconnect_probability = 0.002;
};

struct FuzzReport {
  bool converged = false;
  std::string failure;  // empty when converged

  std::uint64_t server_hash = 0;
  std::uint64_t replay_hash = 0;
  std::vector<std::uint64_t> replica_hashes;

  int generated = 0;         // local ops attempted
  int local_rejected = 0;    // refused against the view, never sent
  int server_rejected = 0;   // Rejected messages received
  int reconnects = 0;
  int id_rewrites = 0;       // placements whose predicted id changed

  Space base;
  std::vector<server::LogEntry> log;
  Space final_space;
};

// Runs `clients` simulated replicas against one in-process session. Every
// message crosses the wire codec, and the scheduler picks a random next step
// (generate a local op, or deliver the head of some connection's queue in
// either direction), so messages sit in flight for random spans and
// interleave arbitrarily while each connection stays FIFO.
//
// Converged means: all queues drained, no pending ops left, and every
// replica's confirmed and view state, the server's space, and the replay of
// the server's log hash identically.
FuzzReport RunConvergenceFuzz(const FuzzOptions& options);

}  // namespace slowspace::fuzz

#endif  // SLOWSPACE_FUZZ_CONVERGENCE_H_
