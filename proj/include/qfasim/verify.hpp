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
#include <vector>

namespace qfasim {

struct VerifyResult {
    std::string name;
    bool pass;
    /// Short human-readable evidence: the worst deviation seen, a witness,
    /// or the reason for failure.
    std::string detail;
};

/// Runs the library's invariant suite with fixed seeds. Every result is
/// deterministic; a failure indicates a real defect, not sampling noise.
std::vector<VerifyResult> run_verification();

} // namespace qfasim
