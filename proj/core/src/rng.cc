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

#include "causaldet/rng.h"

#include <cmath>
#include <numbers>

namespace causaldet {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85;

}  // namespace

std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> ctr, std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; round++) {
        if (round > 0) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
        uint64_t p0 = uint64_t{kPhiloxM0} * ctr[0];
        uint64_t p1 = uint64_t{kPhiloxM1} * ctr[2];
        auto hi0 = static_cast<uint32_t>(p0 >> 32);
        auto lo0 = static_cast<uint32_t>(p0);
        auto hi1 = static_cast<uint32_t>(p1 >> 32);
        auto lo1 = static_cast<uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng::Rng(uint64_t seed, uint64_t stream, uint64_t substream) {
    uint64_t h = mix64(seed);
    h = mix64(h ^ stream);
    h = mix64(h ^ substream);
    key_ = {static_cast<uint32_t>(h), static_cast<uint32_t>(h >> 32)};
}

Rng::result_type Rng::operator()() {
    if (available_ == 0) {
        block_ = philox4x32_10(
            {static_cast<uint32_t>(position_), static_cast<uint32_t>(position_ >> 32), 0, 0}, key_);
        position_++;
        available_ = 2;
    }
    int k = 2 - available_;
    available_--;
    return (uint64_t{block_[2 * k + 1]} << 32) | block_[2 * k];
}

double Rng::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

}  // namespace causaldet
