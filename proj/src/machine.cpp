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

#include "qfasim/machine.hpp"

#include "qfasim/errors.hpp"

namespace qfasim {

MachineKind machine_kind(const Machine& m) {
    switch (m.index()) {
        case 0: return MachineKind::dfa;
        case 1: return MachineKind::pfa;
        case 2: return MachineKind::qfa_unitary;
        default: return MachineKind::qfa_general;
    }
}

const char* machine_kind_name(MachineKind kind) {
    switch (kind) {
        case MachineKind::dfa: return "dfa";
        case MachineKind::pfa: return "pfa";
        case MachineKind::qfa_unitary: return "qfa-unitary";
        case MachineKind::qfa_general: return "qfa-general";
    }
    return "";
}

Eigen::Index machine_state_count(const Machine& m) {
    return std::visit([](const auto& v) { return v.state_count(); }, m);
}

const std::vector<char>& machine_alphabet(const Machine& m) {
    return std::visit(
        [](const auto& v) -> const std::vector<char>& {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, RtDFA>) {
                return v.as_pfa().alphabet();
            } else {
                return v.alphabet();
            }
        },
        m);
}

double machine_acceptance(const Machine& m, const std::string& w) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RtDFA>) {
                return dfa_accepts(v, w) ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, RtPFA>) {
                return pfa_acceptance(v, w);
            } else if constexpr (std::is_same_v<T, MeasureOnceQFA>) {
                return qfa_acceptance(v, w);
            } else {
                return gqfa_acceptance(v, w);
            }
        },
        m);
}

CutpointVerdict machine_classify_cutpoint(const Machine& m, const std::string& w,
                                          double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        fail(ErrorCode::invalid_argument, "cutpoint must lie in [0,1]");
    }
    const double f = machine_acceptance(m, w);
    CutpointClass cls = CutpointClass::at_cutpoint;
    if (f > lambda + kProbTol) {
        cls = CutpointClass::member;
    } else if (f < lambda - kProbTol) {
        cls = CutpointClass::nonmember;
    }
    return {cls, f};
}

} // namespace qfasim
