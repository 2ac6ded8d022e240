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
#include <string>

namespace qfasim {

/// Outcome of one simulated run of the two-way equal-counts decider.
struct EqRunReport {
    bool accepted;
    /// Left-to-right passes consumed across all amplification rounds. Zero
    /// only for the empty string, which is accepted before the loop starts.
    std::uint64_t passes_used;
    std::size_t w_length;
    /// Count of a's minus count of b's.
    std::int64_t delta;
};

/// How one pass of the quantum register is executed. Both modes draw one
/// Bernoulli rejection per pass with the same probability; cell_stepping
/// rotates the qubit symbol by symbol instead of using the closed form.
enum class EqPassMode { analytic, cell_stepping };

/// How the accept-and-halt step after a surviving pass is realized:
/// a Bernoulli draw with exactly 1/(4|w|^2), or two gambler's-ruin walks
/// that must both reach the right barrier, which accepts with the slightly
/// larger probability 1/(|w|+1)^2.
enum class EqAcceptMode { bernoulli, random_walk };

struct EqOptions {
    EqPassMode pass_mode = EqPassMode::analytic;
    EqAcceptMode accept_mode = EqAcceptMode::bernoulli;
    std::uint64_t pass_budget = 1000000000;
};

/// Fair random walk on positions 0..n+1 with absorbing ends: n is the
/// number of free cells between the barriers and start is the initial
/// position, 0 < start < n+1.
struct WalkSpec {
    std::int64_t barrier_distance;
    std::int64_t start;
};

struct WalkTrajectory {
    bool right_absorbed;
    std::uint64_t steps;
};

struct WalkGadgetReport {
    /// Probability that both walks right-absorb: 1/(n+1)^2.
    double acceptance;
    /// The probability the algorithm asks for: 1/(4n^2).
    double target;
    /// acceptance / target, in [1, 4) for n >= 1.
    double ratio;
};

/// Probability that a single pass rejects w: sin^2(delta*sqrt(2)*pi) with
/// delta the a-count minus the b-count. Exactly 0 when the counts agree.
double eq_pass_reject_prob(const std::string& w);

/// Closed form of the restart loop: with a per-pass reject event of
/// probability p_rej racing an accept event of probability p_acc, the run
/// ends in rejection with probability p_rej / (p_acc + p_rej). Throws when
/// both probabilities are zero (the loop would never halt).
double restart_rejection(double p_acc, double p_rej);

/// Overall rejection probability of one unamplified run on w, with
/// p_acc = 1/(4|w|^2). Members (equal counts) are rejected with
/// probability 0.
double eq_exact_rejection(const std::string& w);

/// Simulates t amplification rounds of the restart loop; the verdict is
/// accept only if every round accepts. Deterministic for a fixed seed.
/// Exceeding the pass budget raises budget_exceeded.
EqRunReport eq_simulate(const std::string& w, int t, std::uint64_t seed,
                        const EqOptions& options = {});

/// Exact right-barrier absorption probability, via the absorbing-chain
/// linear system. Equals start/(n+1) for a fair walk.
double walk_right_absorption(const WalkSpec& spec);

/// Runs one trajectory to absorption with the given seed.
WalkTrajectory walk_simulate(const WalkSpec& spec, std::uint64_t seed);

/// Acceptance gadget used by eq_simulate in random_walk mode: two
/// independent walks from position 1, accept iff both right-absorb.
WalkGadgetReport walk_gadget_acceptance(std::int64_t w_length);

} // namespace qfasim
