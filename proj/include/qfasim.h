/* Copyright 2026 The qfasim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the qfasim library: classical and quantum finite automata
 * simulation.
 *
 * Machines are opaque handles created by the open functions and released
 * with qfasim_machine_free. Every function returns QFASIM_OK or an error
 * status; on error, qfasim_last_error() describes the failure for the
 * calling thread. Output parameters are written only on QFASIM_OK unless
 * stated otherwise. All functions are thread-safe; handles are immutable
 * after creation and may be shared across threads.
 */

#ifndef QFASIM_H
#define QFASIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qfasim_status {
    QFASIM_OK = 0,
    QFASIM_ERR_INVALID_ARGUMENT = 1,  /* bad parameter value */
    QFASIM_ERR_INVALID_INPUT = 2,     /* malformed input string */
    QFASIM_ERR_INVALID_SUPEROPERATOR = 3, /* completeness equation fails */
    QFASIM_ERR_VALIDATION = 4,        /* machine violates its invariant */
    QFASIM_ERR_PARSE = 5,             /* file or catalog-name syntax */
    QFASIM_ERR_NOT_FOUND = 6,         /* search exhausted without a witness */
    QFASIM_ERR_BUDGET_EXCEEDED = 7,   /* simulation pass budget hit */
    QFASIM_ERR_IO = 8,                /* file could not be read */
    QFASIM_ERR_INTERNAL = 9           /* unexpected failure */
} qfasim_status;

typedef struct qfasim_machine qfasim_machine;

/* Library version as "major.minor.patch". */
const char* qfasim_version(void);

/* Message for the last error on this thread; empty string if none. */
const char* qfasim_last_error(void);

/* ---- machine lifecycle ------------------------------------------------- */

/* Opens a machine from a catalog name (neq, evenodd:k=N, modp:p=N,
 * rot:theta=X) or a JSON machine file path. */
qfasim_status qfasim_machine_open(const char* ref, qfasim_machine** out);

/* Parses a machine from JSON text. */
qfasim_status qfasim_machine_from_json(const char* text, qfasim_machine** out);

/* Builds the tensor-product machine for multiples of the prime p from
 * `count` rotation coefficients in [1, p-1]. */
qfasim_status qfasim_machine_open_composite(uint64_t p, const uint64_t* coefficients,
                                            size_t count, qfasim_machine** out);

void qfasim_machine_free(qfasim_machine* m);

/* ---- machine introspection --------------------------------------------- */

/* Kind name: "dfa", "pfa", "qfa-unitary", or "qfa-general". The string is
 * static; do not free it. */
qfasim_status qfasim_machine_kind(const qfasim_machine* m, const char** out);

qfasim_status qfasim_machine_state_count(const qfasim_machine* m, int64_t* out);

/* Alphabet symbols as a NUL-terminated string in sorted order. Owned by the
 * handle; valid until qfasim_machine_free. */
qfasim_status qfasim_machine_alphabet(const qfasim_machine* m, const char** out);

/* Serializes the machine; free the result with qfasim_string_free. */
qfasim_status qfasim_machine_to_json(const qfasim_machine* m, char** out);

void qfasim_string_free(char* s);

/* ---- language queries --------------------------------------------------- */

/* Exact acceptance probability of w. */
qfasim_status qfasim_acceptance(const qfasim_machine* m, const char* w, double* out);

/* Cutpoint verdict: +1 above lambda, -1 below, 0 within the indifference
 * band. The probability is always written alongside the verdict. */
qfasim_status qfasim_cutpoint(const qfasim_machine* m, const char* w, double lambda,
                              int* verdict, double* probability);

/* Cutpoint-0 acceptance for unitary machines: 1 iff the probability is
 * positive beyond the zero threshold. */
qfasim_status qfasim_nondet_accepts(const qfasim_machine* m, const char* w, int* out);

/* Empirical acceptance frequency over seeded trials. `outlier` is set to 1
 * when the frequency deviates from the exact value by more than five
 * binomial standard deviations. */
qfasim_status qfasim_monte_carlo(const qfasim_machine* m, const char* w, uint64_t trials,
                                 uint64_t seed, double* frequency, int* outlier);

/* Smallest k <= k_max whose unary acceptance probability lies strictly
 * between the cutpoints; QFASIM_ERR_NOT_FOUND when the scan exhausts. */
qfasim_status qfasim_separate_cutpoints(const qfasim_machine* m, double lambda1,
                                        double lambda2, uint64_t k_max, uint64_t* k,
                                        double* probability);

/* ---- two-way equal-counts algorithm ------------------------------------- */

typedef struct qfasim_eq_report {
    int accepted;          /* 1 accept, 0 reject */
    uint64_t passes_used;  /* passes over the input across all rounds */
    uint64_t w_length;
    int64_t delta;         /* a-count minus b-count */
} qfasim_eq_report;

/* Probability that one pass rejects w: sin^2(delta*sqrt(2)*pi). */
qfasim_status qfasim_eq_pass_reject_prob(const char* w, double* out);

/* Closed-form rejection probability of the restart loop on w. */
qfasim_status qfasim_eq_exact_rejection(const char* w, double* out);

/* Simulates `rounds` amplification rounds. pass_mode: 0 analytic, 1 cell
 * stepping. accept_mode: 0 exact Bernoulli, 1 random-walk gadget. */
qfasim_status qfasim_eq_simulate(const char* w, int rounds, uint64_t seed, int pass_mode,
                                 int accept_mode, qfasim_eq_report* out);

/* ---- random-walk gadget -------------------------------------------------- */

/* Right-barrier absorption probability of a fair walk with `barrier_distance`
 * free cells, started at `start` (1-based, between the barriers). */
qfasim_status qfasim_walk_right_absorption(int64_t barrier_distance, int64_t start,
                                           double* out);

/* Acceptance probability of the two-walk gadget for inputs of length
 * w_length, the 1/(4 w_length^2) target, and their ratio. */
qfasim_status qfasim_walk_gadget(int64_t w_length, double* acceptance, double* target,
                                 double* ratio);

/* ---- searches ------------------------------------------------------------ */

/* Seeded random search for `d` composite coefficients whose worst non-member
 * acceptance is below epsilon. Writes d values into `coefficients` and the
 * verified worst acceptance into `worst`. QFASIM_ERR_NOT_FOUND when the
 * attempt budget runs out. */
qfasim_status qfasim_modp_composite_search(uint64_t p, int d, double epsilon,
                                           uint64_t seed, uint64_t attempts,
                                           uint64_t* coefficients, double* worst);

/* Smallest unary DFA state count that solves the even/odd promise problem
 * with parameter k, exhausting machines of up to m_max states.
 * QFASIM_ERR_NOT_FOUND when no machine within m_max solves it. */
qfasim_status qfasim_evenodd_min_dfa_search(int k, int m_max, int* out);

/* ---- verification --------------------------------------------------------- */

typedef void (*qfasim_verify_callback)(const char* name, int pass, const char* detail,
                                       void* user);

/* Runs the library invariant suite, invoking the callback once per property.
 * Writes the number of failed properties into `failures`. */
qfasim_status qfasim_verify(qfasim_verify_callback callback, void* user, int* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QFASIM_H */
