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

#include "qfasim/general.hpp"

#include <algorithm>
#include <cmath>

#include "qfasim/errors.hpp"

namespace qfasim {

GeneralQFA::GeneralQFA(std::vector<char> alphabet, std::map<char, Superoperator> channels,
                       std::set<Eigen::Index> accepting)
    : alphabet_(std::move(alphabet)),
      channels_(std::move(channels)),
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
        auto it = channels_.find(c);
        if (it == channels_.end()) {
            fail(ErrorCode::invalid_argument,
                 std::string("missing channel for symbol '") + c + "'");
        }
        if (n_ == 0) {
            n_ = it->second.dim();
        } else if (it->second.dim() != n_) {
            fail(ErrorCode::invalid_argument, "channel dimensions disagree");
        }
    }
    if (channels_.size() != alphabet_.size()) {
        fail(ErrorCode::invalid_argument, "channel map has symbols outside the alphabet");
    }
    for (Eigen::Index q : accepting_) {
        if (q < 0 || q >= n_) {
            fail(ErrorCode::invalid_argument,
                 "accepting state " + std::to_string(q) + " out of range");
        }
    }
}

const Superoperator& GeneralQFA::channel(char symbol) const {
    auto it = channels_.find(symbol);
    if (it == channels_.end()) {
        fail(ErrorCode::invalid_input, std::string("symbol '") + symbol + "' not in alphabet");
    }
    return it->second;
}

DensityMatrix GeneralQFA::run(const std::string& w) const {
    if (w.size() > kMaxInputLength) {
        fail(ErrorCode::invalid_input,
             "input length " + std::to_string(w.size()) + " exceeds the cap of " +
                 std::to_string(kMaxInputLength));
    }
    DensityMatrix rho = density_from_pure(PureState::basis(n_, 0));
    for (char c : w) {
        rho = apply_superoperator(channel(c), rho);
    }
    return rho;
}

double gqfa_acceptance(const GeneralQFA& m, const std::string& w) {
    const DensityMatrix rho = m.run(w);
    double p = 0.0;
    for (Eigen::Index q : m.accepting()) {
        p += rho.diagonal_probability(q);
    }
    return std::clamp(p, 0.0, 1.0);
}

GeneralQFA pfa_to_gqfa(const RtPFA& p) {
    const Eigen::Index n = p.state_count();
    std::map<char, Superoperator> channels;
    for (char c : p.alphabet()) {
        const RMatrix& a = p.transition(c).entries();
        std::vector<CMatrix> elements;
        elements.reserve(static_cast<std::size_t>(n));
        for (Eigen::Index j = 0; j < n; ++j) {
            CMatrix e = CMatrix::Zero(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
                e(i, j) = Complex(std::sqrt(std::max(a(i, j), 0.0)), 0.0);
            }
            elements.push_back(std::move(e));
        }
        channels.emplace(c, Superoperator(std::move(elements)));
    }
    std::set<Eigen::Index> accepting(p.accepting().begin(), p.accepting().end());
    return GeneralQFA(p.alphabet(), std::move(channels), std::move(accepting));
}

GeneralQFA unitary_to_gqfa(const MeasureOnceQFA& m) {
    std::map<char, Superoperator> channels;
    for (char c : m.alphabet()) {
        channels.emplace(c, superoperator_from_unitary(m.transition(c)));
    }
    return GeneralQFA(m.alphabet(), std::move(channels), m.accepting());
}

GeneralQFA parallel_compose(const GeneralQFA& m1, const GeneralQFA& m2, AcceptRule rule) {
    if (m1.alphabet() != m2.alphabet()) {
        fail(ErrorCode::invalid_argument, "composed machines must share an alphabet");
    }
    const Eigen::Index n2 = m2.state_count();
    std::map<char, Superoperator> channels;
    for (char c : m1.alphabet()) {
        channels.emplace(c, tensor_superoperators(m1.channel(c), m2.channel(c)));
    }
    std::set<Eigen::Index> accepting;
    for (Eigen::Index i = 0; i < m1.state_count(); ++i) {
        for (Eigen::Index j = 0; j < n2; ++j) {
            const bool in1 = m1.accepting().count(i) > 0;
            const bool in2 = m2.accepting().count(j) > 0;
            const bool keep = (rule == AcceptRule::conjunction) ? (in1 && in2) : (in1 || in2);
            if (keep) {
                accepting.insert(i * n2 + j);
            }
        }
    }
    return GeneralQFA(m1.alphabet(), std::move(channels), std::move(accepting));
}

} // namespace qfasim
