// Copyright 2026 The pscolor Authors
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

#ifndef PSCOLOR_RNG_H_
#define PSCOLOR_RNG_H_

#include <cstdint>
#include <limits>

namespace pscolor {

// Phase tags that key independent substreams. Every randomized step draws
// from Rng(seed, vertex, tag), so two phases never share randomness and
// fixing one vertex's draws leaves every other vertex untouched.
enum class Phase : std::uint64_t {
  kGraph = 1,
  kSample = 2,
  kResolve = 3,
  kPotential = 4,
  kMoserTardos = 5,
  kFirstStep = 6,
  kNibbleAssign = 7,
  kNibbleEqualize = 8,
  kPartition = 9,
  kRestart = 10,
  kDemo = 11,
};

std::uint64_t mix64(std::uint64_t x);

// Counter-based generator: output j is a keyed hash of j, so substreams are
// addressed rather than advanced. Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  Rng(std::uint64_t seed, std::uint64_t stream, Phase tag);
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t tag);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  // Uniform in [0, 1).
  double uniform01();
  bool bernoulli(double p);

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key0_;
  std::uint64_t key1_;
  std::uint64_t counter_ = 0;
};

}  // namespace pscolor

#endif  // PSCOLOR_RNG_H_
