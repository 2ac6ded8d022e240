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

#include "qfasim/two_way.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qfasim/errors.hpp"
#include "qfasim/random.hpp"

namespace qfasim {

namespace {

std::int64_t count_delta(const std::string& w) {
    std::int64_t delta = 0;
    for (char c : w) {
        if (c == 'a') {
            ++delta;
        } else if (c == 'b') {
            --delta;
        } else {
            fail(ErrorCode::invalid_input,
                 std::string("symbol '") + c + "' not in the {a, b} alphabet");
        }
    }
    return delta;
}

void check_walk(const WalkSpec& spec) {
    if (spec.barrier_distance < 1) {
        fail(ErrorCode::invalid_argument, "barrier distance must be at least 1");
    }
    if (spec.start <= 0 || spec.start > spec.barrier_distance) {
        fail(ErrorCode::invalid_argument, "walk start must lie strictly between the barriers");
    }
}

/// One pass of the qubit over w in cell-stepping mode: apply the +/- sqrt(2)*pi
/// rotation per symbol and return the probability of observing the second
/// basis state.
double stepped_reject_prob(const std::string& w) {
    constexpr double theta = std::numbers::sqrt2 * std::numbers::pi;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    double x = 1.0;
    double y = 0.0;
    for (char sym : w) {
        const double sgn = (sym == 'a') ? 1.0 : -1.0;
        const double nx = c * x - sgn * s * y;
        const double ny = sgn * s * x + c * y;
        x = nx;
        y = ny;
    }
    return y * y;
}

} // namespace

double eq_pass_reject_prob(const std::string& w) {
    const std::int64_t delta = count_delta(w);
    if (delta == 0) {
        return 0.0;
    }
    const double s = std::sin(static_cast<double>(delta) * std::numbers::sqrt2 *
                              std::numbers::pi);
    return s * s;
}

double restart_rejection(double p_acc, double p_rej) {
    if (!(p_acc >= 0.0 && p_acc <= 1.0) || !(p_rej >= 0.0 && p_rej <= 1.0)) {
        fail(ErrorCode::invalid_argument, "probabilities must lie in [0,1]");
    }
    if (p_acc + p_rej == 0.0) {
        fail(ErrorCode::invalid_argument, "loop never halts: p_acc + p_rej = 0");
    }
    if (p_rej == 0.0) {
        return 0.0;
    }
    return p_rej / (p_acc + p_rej);
}

double eq_exact_rejection(const std::string& w) {
    if (w.empty()) {
        return 0.0;
    }
    const double n = static_cast<double>(w.size());
    const double p_acc = 1.0 / (4.0 * n * n);
    return restart_rejection(p_acc, eq_pass_reject_prob(w));
}

EqRunReport eq_simulate(const std::string& w, int t, std::uint64_t seed,
                        const EqOptions& options) {
    if (t < 1) {
        fail(ErrorCode::invalid_argument, "amplification rounds must be at least 1");
    }
    const std::int64_t delta = count_delta(w);
    EqRunReport report{true, 0, w.size(), delta};
    if (w.empty()) {
        return report;
    }
    const double n = static_cast<double>(w.size());
    const double p_acc = 1.0 / (4.0 * n * n);
    const double analytic_reject = eq_pass_reject_prob(w);
    const WalkSpec gadget_walk{static_cast<std::int64_t>(w.size()), 1};
    const double single_right = walk_right_absorption(gadget_walk);
    const double walk_acc = single_right * single_right;

    for (int round = 0; round < t; ++round) {
        SplitMix64 gen(derive_stream(seed, static_cast<std::uint64_t>(round)));
        bool round_accepted = false;
        while (!round_accepted) {
            if (report.passes_used >= options.pass_budget) {
                fail(ErrorCode::budget_exceeded,
                     "pass budget of " + std::to_string(options.pass_budget) +
                         " exhausted before a verdict");
            }
            ++report.passes_used;
            const double p_rej = (options.pass_mode == EqPassMode::analytic)
                                     ? analytic_reject
                                     : stepped_reject_prob(w);
            bool reject_fired = gen.next_double() < p_rej;
            bool accept_fired;
            double accept_prob;
            if (options.accept_mode == EqAcceptMode::bernoulli) {
                accept_fired = gen.next_double() < p_acc;
                accept_prob = p_acc;
            } else {
                bool both_right = true;
                for (int walk = 0; walk < 2 && both_right; ++walk) {
                    std::int64_t pos = gadget_walk.start;
                    while (pos > 0 && pos <= gadget_walk.barrier_distance) {
                        pos += (gen.next_double() < 0.5) ? -1 : 1;
                    }
                    both_right = pos > gadget_walk.barrier_distance;
                }
                accept_fired = both_right;
                accept_prob = walk_acc;
            }
            if (reject_fired && accept_fired) {
                // Both halting events fired in this pass. Resolving the tie
                // toward reject with probability p_acc/(p_acc + p_rej) keeps
                // the verdict odds at exactly p_rej : p_acc, so the overall
                // rejection probability equals the geometric-series value
                // p_rej/(p_acc + p_rej) even when p_rej + p_acc exceeds 1.
                reject_fired = gen.next_double() < accept_prob / (accept_prob + p_rej);
                accept_fired = !reject_fired;
            }
            if (reject_fired) {
                report.accepted = false;
                return report;
            }
            round_accepted = accept_fired;
        }
    }
    return report;
}

double walk_right_absorption(const WalkSpec& spec) {
    check_walk(spec);
    const std::size_t n = static_cast<std::size_t>(spec.barrier_distance);
    // Absorption probabilities h_i satisfy h_i = (h_{i-1} + h_{i+1})/2 with
    // h_0 = 0 and h_{n+1} = 1; solve the tridiagonal system by forward
    // elimination and back substitution.
    std::vector<double> diag(n, 1.0);
    std::vector<double> rhs(n, 0.0);
    rhs[n - 1] = 0.5;
    for (std::size_t i = 1; i < n; ++i) {
        const double m = -0.5 / diag[i - 1];
        diag[i] -= m * -0.5;
        rhs[i] -= m * rhs[i - 1];
    }
    std::vector<double> h(n);
    h[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        h[i] = (rhs[i] + 0.5 * h[i + 1]) / diag[i];
    }
    return h[static_cast<std::size_t>(spec.start) - 1];
}

WalkTrajectory walk_simulate(const WalkSpec& spec, std::uint64_t seed) {
    check_walk(spec);
    SplitMix64 gen(seed);
    std::int64_t pos = spec.start;
    std::uint64_t steps = 0;
    while (pos > 0 && pos <= spec.barrier_distance) {
        pos += (gen.next_double() < 0.5) ? -1 : 1;
        ++steps;
    }
    return {pos > spec.barrier_distance, steps};
}

WalkGadgetReport walk_gadget_acceptance(std::int64_t w_length) {
    if (w_length < 1) {
        fail(ErrorCode::invalid_argument, "input length must be at least 1");
    }
    const double single = walk_right_absorption({w_length, 1});
    const double acceptance = single * single;
    const double n = static_cast<double>(w_length);
    const double target = 1.0 / (4.0 * n * n);
    return {acceptance, target, acceptance / target};
}

} // namespace qfasim
