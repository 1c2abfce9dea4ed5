// Copyright 2026 The FairNoise Authors
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

#ifndef FAIRNOISE_RNG_H_
#define FAIRNOISE_RNG_H_

#include <cstdint>
#include <random>

namespace fairnoise {

// All randomness in the toolkit comes from std::mt19937_64, whose output
// sequence is fixed by the standard. Conversions to doubles are done here
// rather than with <random> distributions, whose algorithms are
// implementation-defined, so seeded runs reproduce across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform integer in [0, n), n >= 1 (Lemire's multiply-shift with rejection).
  std::uint64_t Below(std::uint64_t n);

  // Standard normal via Box-Muller; each call consumes two draws.
  double Normal();

  std::uint64_t Next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Derives an independent stream seed from a base seed and a tag.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t tag);

}  // namespace fairnoise

#endif  // FAIRNOISE_RNG_H_
