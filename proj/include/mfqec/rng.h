// Copyright 2026 The mfqec Authors
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

#ifndef MFQEC_RNG_H
#define MFQEC_RNG_H

#include <cstdint>

namespace mfqec {

/// SplitMix64 finalizer.
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stateless counter-based generator: every draw is a pure function of
/// (seed, stream, counter). Shots use their index as the stream and the
/// noise-site index as the counter, so results do not depend on the order
/// or the thread in which shots are evaluated.
inline uint64_t counter_hash(uint64_t seed, uint64_t stream, uint64_t counter) {
    uint64_t h = mix64(seed ^ 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (stream + 0x632be59bd9b4e019ULL));
    h = mix64(h ^ (counter * 0xd1342543de82ef95ULL + 0x8cb92ba72f3d8dd7ULL));
    return h;
}

/// Maps 64 random bits to a double in [0, 1).
inline double to_unit(uint64_t bits) {
    return double(bits >> 11) * 0x1.0p-53;
}

/// Derives a child seed from a parent seed and a tag; used to give each
/// (architecture, distance) job in a sweep its own stream family.
inline uint64_t derive_seed(uint64_t seed, uint64_t tag_a, uint64_t tag_b = 0) {
    return counter_hash(seed, tag_a, tag_b ^ 0x5851f42d4c957f2dULL);
}

}  // namespace mfqec

#endif
