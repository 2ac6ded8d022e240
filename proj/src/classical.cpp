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

#include "qfasim/classical.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qfasim {

namespace {

void check_accepting(Eigen::Index n, const std::vector<Eigen::Index>& accepting) {
    std::set<Eigen::Index> seen;
    for (Eigen::Index s : accepting) {
        if (s < 0 || s >= n) {
            fail(ErrorCode::validation, "accepting state index out of range");
        }
        if (!seen.insert(s).second) {
            fail(ErrorCode::validation, "duplicate accepting state index");
        }
    }
}

void check_alphabet(const std::vector<char>& alphabet,
                    const std::map<char, StochasticMatrix>& transitions) {
    if (alphabet.empty()) {
        fail(ErrorCode::validation, "alphabet must be nonempty");
    }
    std::set<char> seen;
    for (char c : alphabet) {
        if (!seen.insert(c).second) {
            fail(ErrorCode::validation, "duplicate alphabet symbol");
        }
        if (transitions.find(c) == transitions.end()) {
            fail(ErrorCode::validation,
                 std::string("missing transition matrix for symbol '") + c + "'");
        }
    }
    if (transitions.size() != alphabet.size()) {
        fail(ErrorCode::validation, "transition map has symbols outside the alphabet");
    }
}

} // namespace

RtPFA::RtPFA(std::vector<char> alphabet, std::map<char, StochasticMatrix> transitions,
             std::vector<Eigen::Index> accepting)
    : alphabet_(std::move(alphabet)), transitions_(std::move(transitions)),
      accepting_(std::move(accepting)) {
    check_alphabet(alphabet_, transitions_);
    n_ = transitions_.begin()->second.dim();
    for (const auto& [sym, mat] : transitions_) {
        if (mat.dim() != n_) {
            fail(ErrorCode::validation, "transition matrices must share one dimension");
        }
    }
    check_accepting(n_, accepting_);
    std::sort(accepting_.begin(), accepting_.end());
}

bool RtPFA::is_accepting(Eigen::Index state) const {
    return std::binary_search(accepting_.begin(), accepting_.end(), state);
}

const StochasticMatrix& RtPFA::transition(char symbol) const {
    auto it = transitions_.find(symbol);
    if (it == transitions_.end()) {
        fail(ErrorCode::invalid_input, std::string("unknown input symbol '") + symbol + "'");
    }
    return it->second;
}

RtDFA::RtDFA(std::vector<char> alphabet, std::map<char, StochasticMatrix> transitions,
             std::vector<Eigen::Index> accepting)
    : pfa_(std::move(alphabet), std::move(transitions), std::move(accepting)) {
    for (char sym : pfa_.alphabet()) {
        const RMatrix& m = pfa_.transition(sym).entries();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            int ones = 0;
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                const double v = m(i, j);
                if (v == 1.0) {
                    ++ones;
                } else if (v != 0.0) {
                    std::ostringstream os;
                    os << "DFA transition entry (" << i + 1 << "," << j + 1 << ") for '"
                       << sym << "' is " << v << ", not 0 or 1";
                    fail(ErrorCode::validation, os.str());
                }
            }
            if (ones != 1) {
                std::ostringstream os;
                os << "DFA column " << j + 1 << " for '" << sym << "' has " << ones
                   << " ones, expected exactly 1";
                fail(ErrorCode::validation, os.str());
            }
        }
    }
}

Eigen::Index RtDFA::next_state(char symbol, Eigen::Index state) const {
    const RMatrix& m = pfa_.transition(symbol).entries();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, state) == 1.0) {
            return i;
        }
    }
    fail(ErrorCode::validation, "DFA column without a 1");
}

double pfa_acceptance(const RtPFA& m, std::string_view w) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(m.state_count());
    v(0) = 1.0;
    for (char sym : w) {
        v = m.transition(sym).entries() * v;
    }
    double f = 0.0;
    for (Eigen::Index s : m.accepting()) {
        f += v(s);
    }
    return f;
}

bool dfa_accepts(const RtDFA& m, std::string_view w) {
    Eigen::Index state = 0;
    for (char sym : w) {
        state = m.next_state(sym, state);
    }
    return m.as_pfa().is_accepting(state);
}

RtDFA unary_lasso_dfa(int tail, int cycle, const std::vector<Eigen::Index>& accepting) {
    if (tail < 0 || cycle < 1) {
        fail(ErrorCode::invalid_argument, "lasso needs tail >= 0 and cycle >= 1");
    }
    const int m = tail + cycle;
    RMatrix t = RMatrix::Zero(m, m);
    for (int s = 0; s < m; ++s) {
        const int next = (s + 1 < m) ? s + 1 : tail;
        t(next, s) = 1.0;
    }
    std::map<char, StochasticMatrix> transitions;
    transitions.emplace('a', StochasticMatrix(std::move(t)));
    return RtDFA({'a'}, std::move(transitions), accepting);
}

RtDFA evenodd_dfa(int k) {
    if (k < 1 || k > 20) {
        fail(ErrorCode::invalid_argument, "evenodd_dfa requires 1 <= k <= 20");
    }
    return unary_lasso_dfa(0, 1 << (k + 1), {0});
}

namespace {

// State reached by a lasso DFA (tail t, cycle c) after `steps` input
// symbols, without simulating.
long long lasso_state(long long steps, int t, int c) {
    if (steps < t + c) {
        return steps;
    }
    return t + (steps - t) % c;
}

} // namespace

std::optional<int> evenodd_min_dfa_search(int k, int m_max) {
    if (k < 1 || k > 2) {
        fail(ErrorCode::invalid_argument, "exhaustive search supports k in {1,2}");
    }
    if (m_max < 1) {
        fail(ErrorCode::invalid_argument, "m_max must be positive");
    }
    const long long block = 1LL << k;
    const int j_test = 2 * m_max;
    for (int m = 1; m <= m_max; ++m) {
        for (int t = 0; t < m; ++t) {
            const int c = m - t;
            // An accepting set solving the promise on this shape exists
            // exactly when no state is visited by both an even and an odd
            // block count.
            std::vector<bool> even_hit(static_cast<std::size_t>(m), false);
            std::vector<bool> odd_hit(static_cast<std::size_t>(m), false);
            for (int j = 0; j <= j_test; ++j) {
                const auto s = static_cast<std::size_t>(lasso_state(j * block, t, c));
                (j % 2 == 0 ? even_hit : odd_hit)[s] = true;
            }
            bool conflict = false;
            for (int s = 0; s < m; ++s) {
                if (even_hit[static_cast<std::size_t>(s)] && odd_hit[static_cast<std::size_t>(s)]) {
                    conflict = true;
                    break;
                }
            }
            if (!conflict) {
                return m;
            }
        }
    }
    return std::nullopt;
}

} // namespace qfasim
