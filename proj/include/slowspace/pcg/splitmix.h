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

#ifndef SLOWSPACE_PCG_SPLITMIX_H_
#define SLOWSPACE_PCG_SPLITMIX_H_

#include <cstdint>

namespace slowspace::pcg {

constexpr std::uint64_t Rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

// One splitmix64 step from `state`: advance by the golden gamma, then
// finalize. This is the bit-exact recurrence every replica must share.
constexpr std::uint64_t SplitMix64Next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Output of a fresh splitmix64 generator seeded with `x`.
constexpr std::uint64_t SplitMix64Of(std::uint64_t x) {
  return SplitMix64Next(x);
}

constexpr std::uint64_t MixKey(std::uint64_t a, std::uint64_t b,
                               std::uint64_t c) {
  return SplitMix64Of(SplitMix64Of(a ^ Rotl(b, 17)) ^ Rotl(c, 31));
}

// Deterministic random stream. All derived draws (unit reals, bounded
// integers) are defined here so that every implementation can reproduce
// them exactly:
//   NextUnit()     = (Next() >> 11) * 2^-53            in [0, 1)
//   NextBelow(n)   = high 64 bits of Next() * n        in [0, n)
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  constexpr std::uint64_t Next() { return SplitMix64Next(state_); }

  double NextUnit() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  std::uint64_t NextBelow(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(Next()) * n) >> 64);
  }

  // Uniform in the closed range [lo, hi]; requires lo <= hi.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    NextBelow(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  constexpr std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Per-item stream: keyed by item id so one item's draws never depend on
// other items or on edit history.
inline SplitMix64 ItemRng(std::uint64_t space_seed, std::uint64_t item_id,
                          std::uint64_t stream) {
  return SplitMix64(MixKey(space_seed, item_id, stream));
}

}  // namespace slowspace::pcg

#endif  // SLOWSPACE_PCG_SPLITMIX_H_
