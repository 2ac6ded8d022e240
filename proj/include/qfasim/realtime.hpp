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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qfasim/quantum.hpp"

namespace qfasim {

/// Longest input accepted by any acceptance-probability routine. Phase error
/// of repeated rotations grows linearly with the step count, so this cap
/// keeps results within kNormTol of the closed forms.
inline constexpr std::size_t kMaxInputLength = 1000000;

/// Exactness tolerance for promise problems: probability 1 (or 0) must be
/// reproduced to within this bound.
inline constexpr double kExactTol = 1e-9;

/// Measure-once quantum finite automaton: one unitary per input symbol,
/// a single computational-basis measurement at the end. The start state is
/// always the first basis state.
class MeasureOnceQFA {
  public:
    MeasureOnceQFA(std::vector<char> alphabet,
                   std::map<char, UnitaryOperator> transitions,
                   std::set<Eigen::Index> accepting);

    Eigen::Index state_count() const { return n_; }
    const std::vector<char>& alphabet() const { return alphabet_; }
    const UnitaryOperator& transition(char symbol) const;
    const std::set<Eigen::Index>& accepting() const { return accepting_; }
    bool is_unary() const { return alphabet_.size() == 1; }

    /// Final state vector after consuming w, starting from the first basis
    /// state.
    PureState run(const std::string& w) const;

  private:
    Eigen::Index n_;
    std::vector<char> alphabet_;
    std::map<char, UnitaryOperator> transitions_;
    std::set<Eigen::Index> accepting_;
};

enum class CutpointClass { member, nonmember, at_cutpoint };

struct CutpointVerdict {
    CutpointClass cls;
    double probability;
};

struct PromiseCheckResult {
    bool exact;
    /// Largest distance from the required 0/1 value over all samples.
    double worst_deviation;
};

struct CutpointWitness {
    std::size_t k;
    double probability;
};

struct MonteCarloResult {
    double frequency;
    double exact;
    /// Set when |frequency - exact| exceeds five binomial standard
    /// deviations; a deterministic simulator should never see this.
    bool outlier;
};

/// Probability that the final measurement lands in the accepting set.
double qfa_acceptance(const MeasureOnceQFA& m, const std::string& w);

/// Tri-state membership against cutpoint lambda: strictly above (beyond the
/// probability tolerance) is member, strictly below is nonmember, and the
/// band in between is reported as at_cutpoint rather than silently resolved.
CutpointVerdict classify_cutpoint(const MeasureOnceQFA& m, const std::string& w,
                                  double lambda);

/// Cutpoint-0 (nondeterministic) acceptance: true iff the acceptance
/// probability is positive beyond the zero threshold.
bool nondet_accepts(const MeasureOnceQFA& m, const std::string& w);

/// Checks that every yes-sample is accepted with probability 1 and every
/// no-sample with probability 0, both within kExactTol.
PromiseCheckResult promise_check_exact(const MeasureOnceQFA& m,
                                       const std::vector<std::string>& yes_samples,
                                       const std::vector<std::string>& no_samples);

/// Scans a^0, a^1, ... over a unary machine for the first k whose acceptance
/// probability lies strictly between the two cutpoints.
std::optional<CutpointWitness> separate_cutpoints(const MeasureOnceQFA& m,
                                                  double lambda1, double lambda2,
                                                  std::size_t k_max);

/// Samples `trials` Bernoulli draws against an exact probability. Each trial
/// draws from its own stream derived from (seed, trial index), so results do
/// not depend on evaluation order.
MonteCarloResult monte_carlo_from_exact(double exact, std::uint64_t trials,
                                        std::uint64_t seed);

/// Samples the final measurement of m on w `trials` times.
MonteCarloResult monte_carlo_acceptance(const MeasureOnceQFA& m, const std::string& w,
                                        std::uint64_t trials, std::uint64_t seed);

} // namespace qfasim
