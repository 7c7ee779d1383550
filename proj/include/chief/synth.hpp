// Copyright 2026 The Chief Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHIEF_SYNTH_HPP_
#define CHIEF_SYNTH_HPP_

#include <cstdint>
#include <string>

#include "chief/graph.hpp"

namespace chief {

struct SynthSpec {
  int nv = 100;
  double rrp = 0.2;
  std::uint64_t seed = 1;

  std::int64_t ne() const { return 3 * static_cast<std::int64_t>(nv); }
  // "nv=100 ne=300 rrp=0.2 seed=1"
  std::string Describe() const;
};

// Small-world graph: a ring lattice joining every vertex to its 6 nearest
// neighbors, then each lattice edge (u, v) rewired with probability rrp to
// (u, w) for a uniform w that is neither u nor a current neighbor of u.
// A rejected draw is repeated up to 100 times before the edge is kept.
// Each edge draws from its own splitmix64 stream keyed by (seed, index),
// so output depends only on the spec.
Graph GenerateSmallWorld(const SynthSpec& spec);

// splitmix64 step; exposed for tests.
std::uint64_t SplitMix64(std::uint64_t& state);

}  // namespace chief

#endif  // CHIEF_SYNTH_HPP_
