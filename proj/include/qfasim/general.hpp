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
#include <set>
#include <string>
#include <vector>

#include "qfasim/classical.hpp"
#include "qfasim/quantum.hpp"
#include "qfasim/realtime.hpp"

namespace qfasim {

/// Finite automaton whose per-symbol evolution is a superoperator acting on
/// a density matrix. Subsumes unitary machines (single-element channels) and
/// classical PFAs (see pfa_to_gqfa). Starts in the first basis state.
class GeneralQFA {
  public:
    GeneralQFA(std::vector<char> alphabet, std::map<char, Superoperator> channels,
               std::set<Eigen::Index> accepting);

    Eigen::Index state_count() const { return n_; }
    const std::vector<char>& alphabet() const { return alphabet_; }
    const Superoperator& channel(char symbol) const;
    const std::set<Eigen::Index>& accepting() const { return accepting_; }

    /// Density matrix after consuming w.
    DensityMatrix run(const std::string& w) const;

  private:
    Eigen::Index n_;
    std::vector<char> alphabet_;
    std::map<char, Superoperator> channels_;
    std::set<Eigen::Index> accepting_;
};

enum class AcceptRule { conjunction, disjunction };

/// Sum of the accepting diagonal entries of the final density matrix.
double gqfa_acceptance(const GeneralQFA& m, const std::string& w);

/// Embeds a classical PFA: for each symbol with stochastic matrix A, element
/// E_j carries the square roots of A's j-th column in its own j-th column and
/// is zero elsewhere. Acceptance probabilities match the PFA on every string.
GeneralQFA pfa_to_gqfa(const RtPFA& p);

/// Embeds a unitary machine as single-element channels.
GeneralQFA unitary_to_gqfa(const MeasureOnceQFA& m);

/// Tensor composition running both machines side by side: channels are
/// elementwise tensor products over the shared alphabet. Conjunction accepts
/// the pairs with both components accepting, disjunction those with at least
/// one. Pair (i, j) maps to flat index i*n2 + j.
GeneralQFA parallel_compose(const GeneralQFA& m1, const GeneralQFA& m2, AcceptRule rule);

} // namespace qfasim
