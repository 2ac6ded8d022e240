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

#include "qfasim/machine.hpp"

namespace qfasim {

// Machine files are JSON documents:
//   {
//     "kind": "dfa" | "pfa" | "qfa-unitary" | "qfa-general",
//     "n": <state count>,
//     "alphabet": ["a", "b", ...],          // single-character symbols
//     "accepting": [1, ...],                // 1-based state indices
//     "transitions": { "<symbol>": <matrix or element list>, ... }
//   }
// Matrices are lists of rows. dfa/pfa entries are reals; quantum entries are
// [re, im] pairs; a qfa-general symbol maps to a list of element matrices.
// Deserialization runs the full validity checks of the machine's kind.

/// Parses and validates a machine document.
Machine machine_from_json_text(const std::string& text);

/// Serializes a machine to the document format above. Numbers are printed
/// with enough digits to round-trip exactly.
std::string machine_to_json_text(const Machine& m);

/// Resolves a machine reference: a catalog name (`neq`, `evenodd:k=3`,
/// `modp:p=11`, `rot:theta=0.785398`) or a path to a machine file.
Machine load_machine(const std::string& ref);

} // namespace qfasim
