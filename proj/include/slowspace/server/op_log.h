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

#ifndef SLOWSPACE_SERVER_OP_LOG_H_
#define SLOWSPACE_SERVER_OP_LOG_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slowspace/scene/space.h"
#include "slowspace/sync/edit_op.h"
#include "slowspace/sync/envelope.h"
#include "slowspace/util/expected.h"
#include "slowspace/util/json_read.h"

namespace slowspace::server {

struct LogEntry {
  Seq seq = 0;
  sync::ClientId origin = 0;
  sync::EditOp op;

  bool operator==(const LogEntry&) const = default;
};

// Op log files are JSON lines, one canonical {"op":{...},"origin":n,"seq":n}
// object per line.
std::string EncodeLogEntry(const LogEntry& entry);
std::string EncodeLog(std::span<const LogEntry> log);
Expected<std::vector<LogEntry>, DecodeError> DecodeLog(std::string_view bytes);

struct ReplayError {
  Seq seq = 0;
  std::string reason;
};

// Folds `log` over `creation`. The log must continue the creation state's
// sequence without gaps (first entry creation.op_seq + 1), and every entry
// must apply: the log only ever records applied ops.
Expected<Space, ReplayError> ReplayLog(const Space& creation,
                                       std::span<const LogEntry> log);

}  // namespace slowspace::server

#endif  // SLOWSPACE_SERVER_OP_LOG_H_
