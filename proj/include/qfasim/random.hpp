// Copyright 2026 The qfasim Authors
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

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qfasim/quantum.hpp"

// Seeded randomness. Simulation paths use SplitMix64 streams so results are
// byte-identical for a given seed regardless of scheduling; stream i of a
// batch derives from (seed, i) and never overlaps its siblings in practice.

namespace qfasim {

/// SplitMix64: tiny, fast, splittable 64-bit generator.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

/// Derives an independent stream seed from (seed, stream index).
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream);

// Random object generators for property tests and the verification suite.
// These use std::mt19937_64; determinism is per-platform, which is all the
// test suites need.

PureState random_pure_state(Eigen::Index n, std::mt19937_64& rng);

/// Haar-distributed unitary via QR of a complex Gaussian matrix.
UnitaryOperator random_unitary(Eigen::Index n, std::mt19937_64& rng);

/// Valid superoperator with l elements: the first block-column of a Haar
/// unitary of dimension l*n, cut into l blocks of n rows. Orthonormality of
/// those columns is exactly the completeness equation.
Superoperator random_superoperator(Eigen::Index n, std::size_t l, std::mt19937_64& rng);

/// Random mixture of random pure states.
DensityMatrix random_density(Eigen::Index n, std::mt19937_64& rng);

StochasticMatrix random_stochastic(Eigen::Index n, std::mt19937_64& rng);

std::string random_string(const std::vector<char>& alphabet, std::size_t length,
                          std::mt19937_64& rng);

} // namespace qfasim
