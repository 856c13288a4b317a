// Copyright 2026 The qlogic Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <random>

namespace qlogic {

/// Seeded random source owned by a single scenario run.
///
/// Draws come from `std::mt19937_64`, whose output sequence is fixed by the
/// standard, and are mapped to doubles with an explicit 53-bit conversion so
/// reports stay reproducible across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    Rng(const Rng &) = delete;
    Rng &operator=(const Rng &) = delete;
    Rng(Rng &&) noexcept = default;
    Rng &operator=(Rng &&) noexcept = default;

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

/// Seed of trial `index` in a repeated run. Trial 0 uses the run seed itself;
/// later trials get independent sub-seeds derived from (seed, index).
[[nodiscard]] constexpr std::uint64_t trial_seed(std::uint64_t seed,
                                                 std::uint64_t index) noexcept {
    return index == 0 ? seed : mix64(seed ^ mix64(index));
}

} // namespace qlogic
