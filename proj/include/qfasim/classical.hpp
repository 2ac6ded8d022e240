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

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "qfasim/quantum.hpp"

// Real-time DFA and PFA semantics: stochastic vector evolution, acceptance
// probability, and exhaustive small-DFA search for the EVENODD promise
// problem's state lower bound.

namespace qfasim {

/// Real-time probabilistic finite automaton. The initial state is always
/// state 0 and each symbol applies one column-stochastic transition matrix.
class RtPFA {
  public:
    RtPFA(std::vector<char> alphabet, std::map<char, StochasticMatrix> transitions,
          std::vector<Eigen::Index> accepting);

    Eigen::Index state_count() const { return n_; }
    const std::vector<char>& alphabet() const { return alphabet_; }
    const std::vector<Eigen::Index>& accepting() const { return accepting_; }
    bool is_accepting(Eigen::Index state) const;

    /// Throws ErrorCode::invalid_input for symbols outside the alphabet.
    const StochasticMatrix& transition(char symbol) const;

  private:
    Eigen::Index n_;
    std::vector<char> alphabet_;
    std::map<char, StochasticMatrix> transitions_;
    std::vector<Eigen::Index> accepting_;
};

/// Real-time deterministic finite automaton: an RtPFA whose transition
/// matrices contain only zeros and ones, one 1 per column.
class RtDFA {
  public:
    RtDFA(std::vector<char> alphabet, std::map<char, StochasticMatrix> transitions,
          std::vector<Eigen::Index> accepting);

    const RtPFA& as_pfa() const { return pfa_; }
    Eigen::Index state_count() const { return pfa_.state_count(); }
    Eigen::Index next_state(char symbol, Eigen::Index state) const;

  private:
    RtPFA pfa_;
};

/// Acceptance probability: v_0 = (1,0,...,0)^T, one matrix per symbol,
/// summed over accepting entries.
double pfa_acceptance(const RtPFA& m, std::string_view w);

bool dfa_accepts(const RtDFA& m, std::string_view w);

/// Unary DFA with `tail` chain states followed by a cycle of length
/// `cycle`; every unary DFA is isomorphic to one of these.
RtDFA unary_lasso_dfa(int tail, int cycle, const std::vector<Eigen::Index>& accepting);

/// The 2^(k+1)-state unary cycle DFA that solves EVENODD^k: accepting
/// exactly the multiples of 2^(k+1).
RtDFA evenodd_dfa(int k);

/// Smallest m <= m_max for which some m-state unary DFA solves EVENODD^k,
/// found by exhausting lasso shapes (tail + cycle) and accepting sets.
/// Candidate machines are checked on the promise strings a^(j*2^k) for
/// j = 0..2*m_max; that prefix certifies the infinite condition because a
/// unary DFA is eventually periodic with period <= m. Returns nullopt when
/// no machine with at most m_max states solves the problem.
std::optional<int> evenodd_min_dfa_search(int k, int m_max);

} // namespace qfasim
