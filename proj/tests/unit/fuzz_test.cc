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

#include "gtest/gtest.h"
#include "slowspace/scene/canonical.h"

namespace slowspace::fuzz {
namespace {

TEST(FuzzTest, ThreeClientsConverge) {
  const FuzzReport r = RunConvergenceFuzz(FuzzOptions{});
  ASSERT_TRUE(r.converged) << r.failure;
  EXPECT_EQ(r.generated, 1000);
  EXPECT_EQ(r.replica_hashes.size(), 3u);
  for (std::uint64_t h : r.replica_hashes) EXPECT_EQ(h, r.server_hash);
  EXPECT_EQ(r.replay_hash, r.server_hash);
  EXPECT_EQ(SceneHash(r.final_space), r.server_hash);
  // The small grid must actually exercise conflicts.
  EXPECT_GT(r.server_rejected, 0);
  EXPECT_GT(r.id_rewrites, 0);
}

TEST(FuzzTest, FixedSeedIsReproducible) {
  FuzzOptions o;
  o.seed = 1234;
  o.ops = 400;
  const FuzzReport a = RunConvergenceFuzz(o);
  const FuzzReport b = RunConvergenceFuzz(o);
  ASSERT_TRUE(a.converged) << a.failure;
  EXPECT_EQ(a.server_hash, b.server_hash);
  EXPECT_EQ(a.log, b.log);
  EXPECT_EQ(a.server_rejected, b.server_rejected);
  EXPECT_EQ(a.reconnects, b.reconnects);
}

TEST(FuzzTest, ManySeedsAndClientCountsConverge) {
  for (int clients : {1, 2, 5, 8}) {
    for (std::uint64_t seed = 100; seed < 106; ++seed) {
      FuzzOptions o;
      o.clients = clients;
      o.ops = 300;
      o.seed = seed;
      o.reconnect_probability = 0.01;
      const FuzzReport r = RunConvergenceFuzz(o);
      EXPECT_TRUE(r.converged) << "clients " << clients << " seed " << seed << ": "
                               << r.failure;
    }
  }
}

}  // namespace
}  // namespace slowspace::fuzz
