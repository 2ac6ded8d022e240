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
#include <optional>
#include <vector>

#include "qfasim/realtime.hpp"

namespace qfasim {

/// Tensor-product machines are capped at this many 2-state components
/// (2^12 = 4096 states).
inline constexpr int kMaxCompositeComponents = 12;

/// Two-state unary machine that rotates the qubit by theta on every input
/// symbol and accepts in the start state, so f(a^k) = cos^2(k*theta).
MeasureOnceQFA rotation_machine(double theta);

/// Rotation machine with theta = pi/2^(k+1). Accepts a^(j*2^k) with
/// probability exactly 1 for even j and 0 for odd j. Requires 1 <= k <= 50.
MeasureOnceQFA evenodd_machine(int k);

/// Rotation machine recognizing multiples of the prime p: members of
/// { a^m : p | m } are accepted with probability 1 and every non-member with
/// probability at most cos^2(pi/p). Uses theta = 2*pi/p for odd primes and
/// theta = pi/2 for p = 2 (the quarter turn decides parity exactly; a half
/// turn would accept everything).
MeasureOnceQFA modp_machine(std::uint64_t p);

bool is_prime(std::uint64_t p);

/// Tensor product of rotation machines with angles 2*pi*k_i/p. The single
/// accepting state is the one where every component sits in its start state,
/// so f(a^m) is the product of the component probabilities: 1 when p | m,
/// and prod_i cos^2(2*pi*k_i*m/p) otherwise.
MeasureOnceQFA modp_composite(std::uint64_t p, const std::vector<std::uint64_t>& coefficients);

/// Largest acceptance probability over the non-member residues m = 1..p-1,
/// evaluated in closed form.
double composite_worst_nonmember_acceptance(std::uint64_t p,
                                            const std::vector<std::uint64_t>& coefficients);

/// Seeded random search for a coefficient tuple whose worst non-member
/// acceptance is below epsilon. Each candidate is verified exhaustively over
/// m = 1..p-1. Returns the first hit, or nullopt after `attempts` tries.
std::optional<std::vector<std::uint64_t>> search_composite_coefficients(
    std::uint64_t p, int d, double epsilon, std::uint64_t seed, std::uint64_t attempts);

/// Two-state machine over {a, b} that rotates by +sqrt(2)*pi per a and
/// -sqrt(2)*pi per b and accepts in the second state. The acceptance
/// probability is 0 exactly when the counts of a and b agree, and positive
/// otherwise, so with cutpoint 0 it recognizes the strings with unequal
/// counts.
MeasureOnceQFA neq_machine();

} // namespace qfasim
