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

// Exercises the shared library strictly through its C interface.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "qfasim.h"

namespace {

struct MachineGuard {
    qfasim_machine* m = nullptr;
    ~MachineGuard() { qfasim_machine_free(m); }
};

} // namespace

TEST_CASE("the library reports its version") {
    REQUIRE(qfasim_version() != nullptr);
    CHECK(std::string(qfasim_version()) == "1.0.0");
}

TEST_CASE("opening a catalog machine exposes kind, size, and alphabet") {
    MachineGuard g;
    REQUIRE(qfasim_machine_open("neq", &g.m) == QFASIM_OK);

    const char* kind = nullptr;
    REQUIRE(qfasim_machine_kind(g.m, &kind) == QFASIM_OK);
    CHECK(std::string(kind) == "qfa-unitary");

    int64_t states = 0;
    REQUIRE(qfasim_machine_state_count(g.m, &states) == QFASIM_OK);
    CHECK(states == 2);

    const char* alphabet = nullptr;
    REQUIRE(qfasim_machine_alphabet(g.m, &alphabet) == QFASIM_OK);
    CHECK(std::string(alphabet) == "ab");
}

TEST_CASE("acceptance probabilities flow through the C boundary") {
    MachineGuard g;
    REQUIRE(qfasim_machine_open("neq", &g.m) == QFASIM_OK);

    double p = -1.0;
    REQUIRE(qfasim_acceptance(g.m, "ab", &p) == QFASIM_OK);
    CHECK(p <= 1e-12);
    REQUIRE(qfasim_acceptance(g.m, "a", &p) == QFASIM_OK);
    CHECK(std::abs(p - 0.92910809283440876) <= 1e-12);
}

TEST_CASE("unresolvable references set a status and an error message") {
    qfasim_machine* m = nullptr;
    CHECK(qfasim_machine_open("no-such-ref", &m) == QFASIM_ERR_NOT_FOUND);
    CHECK(m == nullptr);
    CHECK(std::strlen(qfasim_last_error()) > 0);
}

TEST_CASE("catalog parameter failures map to their status codes") {
    qfasim_machine* m = nullptr;
    CHECK(qfasim_machine_open("modp:p=9", &m) == QFASIM_ERR_INVALID_ARGUMENT);
    CHECK(std::string(qfasim_last_error()).find("not prime") != std::string::npos);
    CHECK(qfasim_machine_open("evenodd:k=abc", &m) == QFASIM_ERR_PARSE);
}

TEST_CASE("a successful call clears the previous error message") {
    qfasim_machine* bad = nullptr;
    CHECK(qfasim_machine_open("no-such-ref", &bad) == QFASIM_ERR_NOT_FOUND);
    MachineGuard g;
    REQUIRE(qfasim_machine_open("neq", &g.m) == QFASIM_OK);
    CHECK(std::strlen(qfasim_last_error()) == 0);
}

TEST_CASE("JSON text round trips through the handle") {
    MachineGuard g;
    REQUIRE(qfasim_machine_open("modp:p=5", &g.m) == QFASIM_OK);

    char* text = nullptr;
    REQUIRE(qfasim_machine_to_json(g.m, &text) == QFASIM_OK);
    REQUIRE(text != nullptr);

    MachineGuard back;
    REQUIRE(qfasim_machine_from_json(text, &back.m) == QFASIM_OK);
    qfasim_string_free(text);

    double p1 = 0.0;
    double p2 = 1.0;
    REQUIRE(qfasim_acceptance(g.m, "aaaaa", &p1) == QFASIM_OK);
    REQUIRE(qfasim_acceptance(back.m, "aaaaa", &p2) == QFASIM_OK);
    CHECK(p1 == p2);
}

TEST_CASE("malformed JSON reports a parse status") {
    qfasim_machine* m = nullptr;
    CHECK(qfasim_machine_from_json("{ not json", &m) == QFASIM_ERR_PARSE);
    CHECK(qfasim_machine_from_json(R"({"kind": "pfa"})", &m) == QFASIM_ERR_PARSE);
}

TEST_CASE("composite machines open from coefficient arrays") {
    const uint64_t coeffs[] = {1, 2, 4};
    MachineGuard g;
    REQUIRE(qfasim_machine_open_composite(5, coeffs, 3, &g.m) == QFASIM_OK);

    int64_t states = 0;
    REQUIRE(qfasim_machine_state_count(g.m, &states) == QFASIM_OK);
    CHECK(states == 8);

    double p = 0.0;
    REQUIRE(qfasim_acceptance(g.m, "aaaaa", &p) == QFASIM_OK);
    CHECK(p >= 1.0 - 1e-9);

    qfasim_machine* bad = nullptr;
    CHECK(qfasim_machine_open_composite(5, coeffs, 0, &bad) ==
          QFASIM_ERR_INVALID_ARGUMENT);
    CHECK(qfasim_machine_open_composite(9, coeffs, 3, &bad) ==
          QFASIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cutpoint verdicts use the +1/0/-1 convention") {
    MachineGuard g;
    REQUIRE(qfasim_machine_open("rot:theta=0.9272952180016122", &g.m) == QFASIM_OK);

    int verdict = 9;
    double p = 0.0;
    REQUIRE(qfasim_cutpoint(g.m, "", 0.5, &verdict, &p) == QFASIM_OK);
    CHECK(verdict == 1);
    CHECK(p == 1.0);

    REQUIRE(qfasim_cutpoint(g.m, "a", 0.5, &verdict, &p) == QFASIM_OK);
    CHECK(verdict == -1);
    CHECK(std::abs(p - 0.36) <= 1e-9);

    REQUIRE(qfasim_cutpoint(g.m, "a", p, &verdict, &p) == QFASIM_OK);
    CHECK(verdict == 0);

    CHECK(qfasim_cutpoint(g.m, "a", 1.5, &verdict, &p) == QFASIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cutpoint-0 membership is exposed for unitary machines") {
    MachineGuard g;
    REQUIRE(qfasim_machine_open("neq", &g.m) == QFASIM_OK);

    int member = -1;
    REQUIRE(qfasim_nondet_accepts(g.m, "aab", &member) == QFASIM_OK);
    CHECK(member == 1);
    REQUIRE(qfasim_nondet_accepts(g.m, "abab", &member) == QFASIM_OK);
    CHECK(member == 0);

    MachineGuard dfa;
    REQUIRE(qfasim_machine_from_json(
                R"({"kind": "dfa", "n": 1, "alphabet": ["a"], "accepting": [1],
                    "transitions": {"a": [[1]]}})",
                &dfa.m) == QFASIM_OK);
    CHECK(qfasim_nondet_accepts(dfa.m, "a", &member) == QFASIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("monte carlo sampling is deterministic through the C interface") {
    MachineGuard g;
    REQUIRE(qfasim_machine_open("rot:theta=0.785398163397448", &g.m) == QFASIM_OK);

    double f1 = 0.0;
    double f2 = 0.0;
    int outlier = 1;
    REQUIRE(qfasim_monte_carlo(g.m, "a", 40000, 7, &f1, &outlier) == QFASIM_OK);
    CHECK(outlier == 0);
    CHECK(std::abs(f1 - 0.5) < 0.02);
    REQUIRE(qfasim_monte_carlo(g.m, "a", 40000, 7, &f2, &outlier) == QFASIM_OK);
    CHECK(f1 == f2);

    CHECK(qfasim_monte_carlo(g.m, "a", 0, 7, &f1, &outlier) ==
          QFASIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cutpoint separation returns the frozen witness") {
    MachineGuard g;
    REQUIRE(qfasim_machine_open("rot:theta=0.9272952180016122", &g.m) == QFASIM_OK);

    uint64_t k = 0;
    double p = 0.0;
    REQUIRE(qfasim_separate_cutpoints(g.m, 0.10, 0.12, 1000000, &k, &p) == QFASIM_OK);
    CHECK(k == 19);
    CHECK(std::abs(p - 0.11111905461059104) <= 1e-9);

    CHECK(qfasim_separate_cutpoints(g.m, 0.10, 0.12, 5, &k, &p) == QFASIM_ERR_NOT_FOUND);
}

TEST_CASE("the two-way decider's closed forms cross the boundary") {
    double p = 0.0;
    REQUIRE(qfasim_eq_pass_reject_prob("ab", &p) == QFASIM_OK);
    CHECK(p == 0.0);
    REQUIRE(qfasim_eq_pass_reject_prob("a", &p) == QFASIM_OK);
    CHECK(std::abs(p - 0.92910809283440876) <= 1e-12);

    REQUIRE(qfasim_eq_exact_rejection("a", &p) == QFASIM_OK);
    CHECK(std::abs(p - 0.78797533362778005) <= 1e-12);

    CHECK(qfasim_eq_pass_reject_prob("abc", &p) == QFASIM_ERR_INVALID_INPUT);
}

TEST_CASE("two-way simulation reports fill every field") {
    qfasim_eq_report report;
    REQUIRE(qfasim_eq_simulate("abab", 2, 11, 0, 0, &report) == QFASIM_OK);
    CHECK(report.accepted == 1);
    CHECK(report.passes_used >= 2);
    CHECK(report.w_length == 4);
    CHECK(report.delta == 0);

    REQUIRE(qfasim_eq_simulate("aab", 1, 11, 1, 1, &report) == QFASIM_OK);
    CHECK(report.delta == 1);

    CHECK(qfasim_eq_simulate("ab", 0, 1, 0, 0, &report) == QFASIM_ERR_INVALID_ARGUMENT);
    CHECK(qfasim_eq_simulate("ab", 1, 1, 2, 0, &report) == QFASIM_ERR_INVALID_ARGUMENT);
    CHECK(qfasim_eq_simulate("ab", 1, 1, 0, 5, &report) == QFASIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("walk absorption and the acceptance gadget match closed forms") {
    double p = 0.0;
    REQUIRE(qfasim_walk_right_absorption(5, 1, &p) == QFASIM_OK);
    CHECK(std::abs(p - 1.0 / 6.0) <= 1e-12);
    CHECK(qfasim_walk_right_absorption(5, 6, &p) == QFASIM_ERR_INVALID_ARGUMENT);

    double acceptance = 0.0;
    double target = 0.0;
    double ratio = 0.0;
    REQUIRE(qfasim_walk_gadget(10, &acceptance, &target, &ratio) == QFASIM_OK);
    CHECK(std::abs(acceptance - 1.0 / 121.0) <= 1e-12);
    CHECK(std::abs(target - 1.0 / 400.0) <= 1e-15);
    CHECK(ratio >= 1.0);
    CHECK(ratio < 4.0);
}

TEST_CASE("the composite coefficient search writes its results") {
    std::vector<uint64_t> coeffs(3, 0);
    double worst = 1.0;
    REQUIRE(qfasim_modp_composite_search(5, 3, 0.3, 42, 1000, coeffs.data(), &worst) ==
            QFASIM_OK);
    CHECK(worst < 0.3);
    for (uint64_t k : coeffs) {
        CHECK(k >= 1);
        CHECK(k <= 4);
    }

    CHECK(qfasim_modp_composite_search(5, 1, 1e-6, 1, 20, coeffs.data(), &worst) ==
          QFASIM_ERR_NOT_FOUND);
}

TEST_CASE("the minimum-DFA search reports counts and exhaustion") {
    int states = 0;
    REQUIRE(qfasim_evenodd_min_dfa_search(1, 6, &states) == QFASIM_OK);
    CHECK(states == 4);
    CHECK(qfasim_evenodd_min_dfa_search(1, 3, &states) == QFASIM_ERR_NOT_FOUND);
    CHECK(qfasim_evenodd_min_dfa_search(3, 6, &states) == QFASIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null arguments are rejected uniformly") {
    double p = 0.0;
    MachineGuard g;
    REQUIRE(qfasim_machine_open("neq", &g.m) == QFASIM_OK);

    CHECK(qfasim_machine_open(nullptr, &g.m) == QFASIM_ERR_INVALID_ARGUMENT);
    CHECK(qfasim_machine_open("neq", nullptr) == QFASIM_ERR_INVALID_ARGUMENT);
    CHECK(qfasim_acceptance(nullptr, "a", &p) == QFASIM_ERR_INVALID_ARGUMENT);
    CHECK(qfasim_acceptance(g.m, nullptr, &p) == QFASIM_ERR_INVALID_ARGUMENT);
    CHECK(qfasim_acceptance(g.m, "a", nullptr) == QFASIM_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(qfasim_last_error()) > 0);

    // Freeing null is a no-op, mirroring free().
    qfasim_machine_free(nullptr);
    qfasim_string_free(nullptr);
}

namespace {

struct VerifyTally {
    int total = 0;
    int failed = 0;
};

void tally_callback(const char* name, int pass, const char* detail, void* user) {
    auto* tally = static_cast<VerifyTally*>(user);
    ++tally->total;
    if (pass == 0) {
        ++tally->failed;
    }
    CHECK(name != nullptr);
    CHECK(detail != nullptr);
}

} // namespace

TEST_CASE("the invariant suite runs through the C interface and passes") {
    VerifyTally tally;
    int failures = -1;
    REQUIRE(qfasim_verify(tally_callback, &tally, &failures) == QFASIM_OK);
    CHECK(failures == 0);
    CHECK(tally.failed == 0);
    CHECK(tally.total >= 20);
}
