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

#include "qfasim/realtime.hpp"

#include <algorithm>
#include <cmath>

#include "qfasim/errors.hpp"
#include "qfasim/random.hpp"

namespace qfasim {

namespace {

void check_length(const std::string& w) {
    if (w.size() > kMaxInputLength) {
        fail(ErrorCode::invalid_input,
             "input length " + std::to_string(w.size()) + " exceeds the cap of " +
                 std::to_string(kMaxInputLength));
    }
}

} // namespace

MeasureOnceQFA::MeasureOnceQFA(std::vector<char> alphabet,
                               std::map<char, UnitaryOperator> transitions,
                               std::set<Eigen::Index> accepting)
    : alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      accepting_(std::move(accepting)) {
    if (alphabet_.empty()) {
        fail(ErrorCode::invalid_argument, "alphabet must be nonempty");
    }
    std::sort(alphabet_.begin(), alphabet_.end());
    if (std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end()) {
        fail(ErrorCode::invalid_argument, "alphabet contains a repeated symbol");
    }
    n_ = 0;
    for (char c : alphabet_) {
        auto it = transitions_.find(c);
        if (it == transitions_.end()) {
            fail(ErrorCode::invalid_argument,
                 std::string("missing transition for symbol '") + c + "'");
        }
        if (n_ == 0) {
            n_ = it->second.dim();
        } else if (it->second.dim() != n_) {
            fail(ErrorCode::invalid_argument, "transition dimensions disagree");
        }
    }
    if (transitions_.size() != alphabet_.size()) {
        fail(ErrorCode::invalid_argument, "transition map has symbols outside the alphabet");
    }
    for (Eigen::Index q : accepting_) {
        if (q < 0 || q >= n_) {
            fail(ErrorCode::invalid_argument,
                 "accepting state " + std::to_string(q) + " out of range");
        }
    }
}

const UnitaryOperator& MeasureOnceQFA::transition(char symbol) const {
    auto it = transitions_.find(symbol);
    if (it == transitions_.end()) {
        fail(ErrorCode::invalid_input, std::string("symbol '") + symbol + "' not in alphabet");
    }
    return it->second;
}

PureState MeasureOnceQFA::run(const std::string& w) const {
    check_length(w);
    CVector psi = PureState::basis(n_, 0).amplitudes();
    for (char c : w) {
        psi = transition(c).entries() * psi;
    }
    return PureState(std::move(psi));
}

double qfa_acceptance(const MeasureOnceQFA& m, const std::string& w) {
    const PureState final_state = m.run(w);
    double p = 0.0;
    for (Eigen::Index q : m.accepting()) {
        p += std::norm(final_state.amplitudes()(q));
    }
    return std::clamp(p, 0.0, 1.0);
}

CutpointVerdict classify_cutpoint(const MeasureOnceQFA& m, const std::string& w,
                                  double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        fail(ErrorCode::invalid_argument, "cutpoint must lie in [0,1]");
    }
    const double f = qfa_acceptance(m, w);
    CutpointClass cls = CutpointClass::at_cutpoint;
    if (f > lambda + kProbTol) {
        cls = CutpointClass::member;
    } else if (f < lambda - kProbTol) {
        cls = CutpointClass::nonmember;
    }
    return {cls, f};
}

bool nondet_accepts(const MeasureOnceQFA& m, const std::string& w) {
    return qfa_acceptance(m, w) > kProbTol;
}

PromiseCheckResult promise_check_exact(const MeasureOnceQFA& m,
                                       const std::vector<std::string>& yes_samples,
                                       const std::vector<std::string>& no_samples) {
    double worst = 0.0;
    for (const std::string& w : yes_samples) {
        worst = std::max(worst, 1.0 - qfa_acceptance(m, w));
    }
    for (const std::string& w : no_samples) {
        worst = std::max(worst, qfa_acceptance(m, w));
    }
    return {worst <= kExactTol, worst};
}

std::optional<CutpointWitness> separate_cutpoints(const MeasureOnceQFA& m,
                                                  double lambda1, double lambda2,
                                                  std::size_t k_max) {
    if (!m.is_unary()) {
        fail(ErrorCode::invalid_argument, "cutpoint separation needs a unary machine");
    }
    if (!(lambda1 >= 0.0 && lambda1 < lambda2 && lambda2 <= 1.0)) {
        fail(ErrorCode::invalid_argument, "cutpoints must satisfy 0 <= lambda1 < lambda2 <= 1");
    }
    const char a = m.alphabet()[0];
    const UnitaryOperator& u = m.transition(a);
    CVector psi = PureState::basis(m.state_count(), 0).amplitudes();
    for (std::size_t k = 0; k <= k_max; ++k) {
        double f = 0.0;
        for (Eigen::Index q : m.accepting()) {
            f += std::norm(psi(q));
        }
        if (f > lambda1 && f < lambda2) {
            return CutpointWitness{k, f};
        }
        psi = u.entries() * psi;
    }
    return std::nullopt;
}

MonteCarloResult monte_carlo_from_exact(double exact, std::uint64_t trials,
                                        std::uint64_t seed) {
    if (trials == 0) {
        fail(ErrorCode::invalid_argument, "trial count must be positive");
    }
    if (!(exact >= 0.0 && exact <= 1.0)) {
        fail(ErrorCode::invalid_argument, "probability must lie in [0,1]");
    }
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        SplitMix64 gen(derive_stream(seed, i));
        if (gen.next_double() < exact) {
            ++hits;
        }
    }
    const double freq = static_cast<double>(hits) / static_cast<double>(trials);
    const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
    const bool outlier = std::abs(freq - exact) > 5.0 * sigma + kProbTol;
    return {freq, exact, outlier};
}

MonteCarloResult monte_carlo_acceptance(const MeasureOnceQFA& m, const std::string& w,
                                        std::uint64_t trials, std::uint64_t seed) {
    return monte_carlo_from_exact(qfa_acceptance(m, w), trials, seed);
}

} // namespace qfasim
