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

#include <string>
#include <variant>

#include "qfasim/classical.hpp"
#include "qfasim/general.hpp"
#include "qfasim/realtime.hpp"

namespace qfasim {

enum class MachineKind { dfa, pfa, qfa_unitary, qfa_general };

/// Any automaton variant the simulator knows how to run.
using Machine = std::variant<RtDFA, RtPFA, MeasureOnceQFA, GeneralQFA>;

MachineKind machine_kind(const Machine& m);

/// The serialized name of a kind: "dfa", "pfa", "qfa-unitary", "qfa-general".
const char* machine_kind_name(MachineKind kind);

Eigen::Index machine_state_count(const Machine& m);

const std::vector<char>& machine_alphabet(const Machine& m);

/// Acceptance probability under the variant's own semantics.
double machine_acceptance(const Machine& m, const std::string& w);

/// Cutpoint verdict for any machine kind, using the same indifference band
/// as classify_cutpoint.
CutpointVerdict machine_classify_cutpoint(const Machine& m, const std::string& w,
                                          double lambda);

} // namespace qfasim
