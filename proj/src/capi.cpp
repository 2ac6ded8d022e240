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

#include "qfasim.h"

#include <cstring>
#include <new>
#include <string>

#include "qfasim/catalog.hpp"
#include "qfasim/errors.hpp"
#include "qfasim/machine.hpp"
#include "qfasim/serialize.hpp"
#include "qfasim/two_way.hpp"
#include "qfasim/verify.hpp"

struct qfasim_machine {
    qfasim::Machine value;
    std::string alphabet;

    explicit qfasim_machine(qfasim::Machine m) : value(std::move(m)) {
        for (char c : qfasim::machine_alphabet(value)) {
            alphabet.push_back(c);
        }
    }
};

namespace {

thread_local std::string g_last_error;

qfasim_status to_status(qfasim::ErrorCode code) {
    switch (code) {
        case qfasim::ErrorCode::invalid_argument: return QFASIM_ERR_INVALID_ARGUMENT;
        case qfasim::ErrorCode::invalid_input: return QFASIM_ERR_INVALID_INPUT;
        case qfasim::ErrorCode::invalid_superoperator: return QFASIM_ERR_INVALID_SUPEROPERATOR;
        case qfasim::ErrorCode::validation: return QFASIM_ERR_VALIDATION;
        case qfasim::ErrorCode::parse: return QFASIM_ERR_PARSE;
        case qfasim::ErrorCode::not_found: return QFASIM_ERR_NOT_FOUND;
        case qfasim::ErrorCode::budget_exceeded: return QFASIM_ERR_BUDGET_EXCEEDED;
        case qfasim::ErrorCode::io: return QFASIM_ERR_IO;
    }
    return QFASIM_ERR_INTERNAL;
}

template <typename F>
qfasim_status wrap(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const qfasim::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QFASIM_ERR_INTERNAL;
    }
}

qfasim_status require(bool ok, const char* what) {
    if (!ok) {
        g_last_error = what;
        return QFASIM_ERR_INVALID_ARGUMENT;
    }
    return QFASIM_OK;
}

const qfasim::MeasureOnceQFA* as_unitary(const qfasim_machine* m) {
    return std::get_if<qfasim::MeasureOnceQFA>(&m->value);
}

} // namespace

extern "C" {

const char* qfasim_version(void) {
    return "1.0.0";
}

const char* qfasim_last_error(void) {
    return g_last_error.c_str();
}

qfasim_status qfasim_machine_open(const char* ref, qfasim_machine** out) {
    if (auto s = require(ref && out, "ref and out must be non-null")) {
        return s;
    }
    return wrap([&] {
        *out = new qfasim_machine(qfasim::load_machine(ref));
        return QFASIM_OK;
    });
}

qfasim_status qfasim_machine_from_json(const char* text, qfasim_machine** out) {
    if (auto s = require(text && out, "text and out must be non-null")) {
        return s;
    }
    return wrap([&] {
        *out = new qfasim_machine(qfasim::machine_from_json_text(text));
        return QFASIM_OK;
    });
}

qfasim_status qfasim_machine_open_composite(uint64_t p, const uint64_t* coefficients,
                                            size_t count, qfasim_machine** out) {
    if (auto s = require(coefficients && out, "coefficients and out must be non-null")) {
        return s;
    }
    return wrap([&] {
        std::vector<std::uint64_t> coeffs(coefficients, coefficients + count);
        *out = new qfasim_machine(qfasim::modp_composite(p, coeffs));
        return QFASIM_OK;
    });
}

void qfasim_machine_free(qfasim_machine* m) {
    delete m;
}

qfasim_status qfasim_machine_kind(const qfasim_machine* m, const char** out) {
    if (auto s = require(m && out, "machine and out must be non-null")) {
        return s;
    }
    *out = qfasim::machine_kind_name(qfasim::machine_kind(m->value));
    return QFASIM_OK;
}

qfasim_status qfasim_machine_state_count(const qfasim_machine* m, int64_t* out) {
    if (auto s = require(m && out, "machine and out must be non-null")) {
        return s;
    }
    *out = static_cast<int64_t>(qfasim::machine_state_count(m->value));
    return QFASIM_OK;
}

qfasim_status qfasim_machine_alphabet(const qfasim_machine* m, const char** out) {
    if (auto s = require(m && out, "machine and out must be non-null")) {
        return s;
    }
    *out = m->alphabet.c_str();
    return QFASIM_OK;
}

qfasim_status qfasim_machine_to_json(const qfasim_machine* m, char** out) {
    if (auto s = require(m && out, "machine and out must be non-null")) {
        return s;
    }
    return wrap([&] {
        const std::string text = qfasim::machine_to_json_text(m->value);
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
        return QFASIM_OK;
    });
}

void qfasim_string_free(char* s) {
    delete[] s;
}

qfasim_status qfasim_acceptance(const qfasim_machine* m, const char* w, double* out) {
    if (auto s = require(m && w && out, "machine, w, and out must be non-null")) {
        return s;
    }
    return wrap([&] {
        *out = qfasim::machine_acceptance(m->value, w);
        return QFASIM_OK;
    });
}

qfasim_status qfasim_cutpoint(const qfasim_machine* m, const char* w, double lambda,
                              int* verdict, double* probability) {
    if (auto s = require(m && w && verdict && probability,
                         "machine, w, verdict, and probability must be non-null")) {
        return s;
    }
    return wrap([&] {
        const qfasim::CutpointVerdict v =
            qfasim::machine_classify_cutpoint(m->value, w, lambda);
        switch (v.cls) {
            case qfasim::CutpointClass::member: *verdict = 1; break;
            case qfasim::CutpointClass::nonmember: *verdict = -1; break;
            case qfasim::CutpointClass::at_cutpoint: *verdict = 0; break;
        }
        *probability = v.probability;
        return QFASIM_OK;
    });
}

qfasim_status qfasim_nondet_accepts(const qfasim_machine* m, const char* w, int* out) {
    if (auto s = require(m && w && out, "machine, w, and out must be non-null")) {
        return s;
    }
    return wrap([&] {
        const auto* unitary = as_unitary(m);
        if (!unitary) {
            qfasim::fail(qfasim::ErrorCode::invalid_argument,
                         "cutpoint-0 acceptance is defined for qfa-unitary machines");
        }
        *out = qfasim::nondet_accepts(*unitary, w) ? 1 : 0;
        return QFASIM_OK;
    });
}

qfasim_status qfasim_monte_carlo(const qfasim_machine* m, const char* w, uint64_t trials,
                                 uint64_t seed, double* frequency, int* outlier) {
    if (auto s = require(m && w && frequency && outlier,
                         "machine, w, frequency, and outlier must be non-null")) {
        return s;
    }
    return wrap([&] {
        const double exact = qfasim::machine_acceptance(m->value, w);
        const qfasim::MonteCarloResult r =
            qfasim::monte_carlo_from_exact(exact, trials, seed);
        *frequency = r.frequency;
        *outlier = r.outlier ? 1 : 0;
        return QFASIM_OK;
    });
}

qfasim_status qfasim_separate_cutpoints(const qfasim_machine* m, double lambda1,
                                        double lambda2, uint64_t k_max, uint64_t* k,
                                        double* probability) {
    if (auto s = require(m && k && probability,
                         "machine, k, and probability must be non-null")) {
        return s;
    }
    return wrap([&] {
        const auto* unitary = as_unitary(m);
        if (!unitary) {
            qfasim::fail(qfasim::ErrorCode::invalid_argument,
                         "cutpoint separation is defined for qfa-unitary machines");
        }
        const auto witness = qfasim::separate_cutpoints(*unitary, lambda1, lambda2, k_max);
        if (!witness) {
            qfasim::fail(qfasim::ErrorCode::not_found,
                         "no witness up to k_max = " + std::to_string(k_max));
        }
        *k = witness->k;
        *probability = witness->probability;
        return QFASIM_OK;
    });
}

qfasim_status qfasim_eq_pass_reject_prob(const char* w, double* out) {
    if (auto s = require(w && out, "w and out must be non-null")) {
        return s;
    }
    return wrap([&] {
        *out = qfasim::eq_pass_reject_prob(w);
        return QFASIM_OK;
    });
}

qfasim_status qfasim_eq_exact_rejection(const char* w, double* out) {
    if (auto s = require(w && out, "w and out must be non-null")) {
        return s;
    }
    return wrap([&] {
        *out = qfasim::eq_exact_rejection(w);
        return QFASIM_OK;
    });
}

qfasim_status qfasim_eq_simulate(const char* w, int rounds, uint64_t seed, int pass_mode,
                                 int accept_mode, qfasim_eq_report* out) {
    if (auto s = require(w && out, "w and out must be non-null")) {
        return s;
    }
    if (auto s = require(pass_mode == 0 || pass_mode == 1, "pass_mode must be 0 or 1")) {
        return s;
    }
    if (auto s = require(accept_mode == 0 || accept_mode == 1, "accept_mode must be 0 or 1")) {
        return s;
    }
    return wrap([&] {
        qfasim::EqOptions options;
        options.pass_mode = pass_mode == 0 ? qfasim::EqPassMode::analytic
                                           : qfasim::EqPassMode::cell_stepping;
        options.accept_mode = accept_mode == 0 ? qfasim::EqAcceptMode::bernoulli
                                               : qfasim::EqAcceptMode::random_walk;
        const qfasim::EqRunReport r = qfasim::eq_simulate(w, rounds, seed, options);
        out->accepted = r.accepted ? 1 : 0;
        out->passes_used = r.passes_used;
        out->w_length = r.w_length;
        out->delta = r.delta;
        return QFASIM_OK;
    });
}

qfasim_status qfasim_walk_right_absorption(int64_t barrier_distance, int64_t start,
                                           double* out) {
    if (auto s = require(out != nullptr, "out must be non-null")) {
        return s;
    }
    return wrap([&] {
        *out = qfasim::walk_right_absorption({barrier_distance, start});
        return QFASIM_OK;
    });
}

qfasim_status qfasim_walk_gadget(int64_t w_length, double* acceptance, double* target,
                                 double* ratio) {
    if (auto s = require(acceptance && target && ratio,
                         "acceptance, target, and ratio must be non-null")) {
        return s;
    }
    return wrap([&] {
        const qfasim::WalkGadgetReport r = qfasim::walk_gadget_acceptance(w_length);
        *acceptance = r.acceptance;
        *target = r.target;
        *ratio = r.ratio;
        return QFASIM_OK;
    });
}

qfasim_status qfasim_modp_composite_search(uint64_t p, int d, double epsilon,
                                           uint64_t seed, uint64_t attempts,
                                           uint64_t* coefficients, double* worst) {
    if (auto s = require(coefficients && worst, "coefficients and worst must be non-null")) {
        return s;
    }
    return wrap([&] {
        const auto coeffs =
            qfasim::search_composite_coefficients(p, d, epsilon, seed, attempts);
        if (!coeffs) {
            qfasim::fail(qfasim::ErrorCode::not_found,
                         "no coefficient tuple found in " + std::to_string(attempts) +
                             " attempts");
        }
        for (std::size_t i = 0; i < coeffs->size(); ++i) {
            coefficients[i] = (*coeffs)[i];
        }
        *worst = qfasim::composite_worst_nonmember_acceptance(p, *coeffs);
        return QFASIM_OK;
    });
}

qfasim_status qfasim_evenodd_min_dfa_search(int k, int m_max, int* out) {
    if (auto s = require(out != nullptr, "out must be non-null")) {
        return s;
    }
    return wrap([&] {
        const auto found = qfasim::evenodd_min_dfa_search(k, m_max);
        if (!found) {
            qfasim::fail(qfasim::ErrorCode::not_found,
                         "no unary DFA with at most " + std::to_string(m_max) +
                             " states solves the problem");
        }
        *out = *found;
        return QFASIM_OK;
    });
}

qfasim_status qfasim_verify(qfasim_verify_callback callback, void* user, int* failures) {
    if (auto s = require(failures != nullptr, "failures must be non-null")) {
        return s;
    }
    return wrap([&] {
        int failed = 0;
        for (const qfasim::VerifyResult& r : qfasim::run_verification()) {
            if (!r.pass) {
                ++failed;
            }
            if (callback) {
                callback(r.name.c_str(), r.pass ? 1 : 0, r.detail.c_str(), user);
            }
        }
        *failures = failed;
        return QFASIM_OK;
    });
}

} // extern "C"
