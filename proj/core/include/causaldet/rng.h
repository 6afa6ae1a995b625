// Copyright 2026 The causaldet Authors
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

#ifndef CAUSALDET_RNG_H
#define CAUSALDET_RNG_H

#include <array>
#include <cstdint>
#include <iterator>
#include <limits>

namespace causaldet {

/// Philox4x32-10 block function: encrypts a 128-bit counter under a 64-bit key.
std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// SplitMix64 finalizer; used to derive stream keys.
uint64_t mix64(uint64_t x);

/// Counter-based 64-bit generator built on Philox4x32-10.
///
/// A stream is identified by (seed, stream, substream). The triple is hashed
/// into the Philox key and the output position is the counter, so streams
/// with different identifiers never share a sequence and any stream can be
/// recreated from its identifiers alone. Satisfies
/// UniformRandomBitGenerator. Not thread-safe; give every task its own
/// instance.
class Rng {
   public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed, uint64_t stream = 0, uint64_t substream = 0);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal deviate (Box-Muller, no cached second value).
    double normal();

    /// Index drawn from the discrete distribution given by cumulative
    /// weights (last entry is the total).
    template <typename Range>
    size_t pick(const Range &cumulative) {
        double total = *std::prev(std::end(cumulative));
        double u = uniform() * total;
        size_t k = 0;
        for (auto it = std::begin(cumulative); it != std::end(cumulative); ++it, ++k) {
            if (u < *it) {
                return k;
            }
        }
        return k - 1;
    }

   private:
    std::array<uint32_t, 2> key_;
    uint64_t position_ = 0;
    std::array<uint32_t, 4> block_{};
    int available_ = 0;
};

}  // namespace causaldet

#endif
