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

// Command-line front end. Talks to the simulator exclusively through the
// C API in qfasim.h.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qfasim.h"

namespace {

constexpr int kExitVerdictReject = 1;
constexpr int kExitError = 2;

void print_error(qfasim_status status) {
    std::fprintf(stderr, "error: %s (status %d)\n", qfasim_last_error(),
                 static_cast<int>(status));
}

/// Fixed 15 decimal places, '.' separator regardless of locale settings.
std::string format_prob(double p) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.15f", p);
    return buffer;
}

struct MachineCloser {
    void operator()(qfasim_machine* m) const { qfasim_machine_free(m); }
};
using MachinePtr = std::unique_ptr<qfasim_machine, MachineCloser>;

/// Opens a machine reference or exits with a usage error.
MachinePtr open_machine(const std::string& ref) {
    qfasim_machine* raw = nullptr;
    const qfasim_status status = qfasim_machine_open(ref.c_str(), &raw);
    if (status != QFASIM_OK) {
        print_error(status);
        std::exit(kExitError);
    }
    return MachinePtr(raw);
}

/// Exits with a usage error unless the call succeeded.
void check(qfasim_status status) {
    if (status != QFASIM_OK) {
        print_error(status);
        std::exit(kExitError);
    }
}

int cmd_prob(const std::string& ref, const std::string& w) {
    const MachinePtr m = open_machine(ref);
    double p = 0.0;
    check(qfasim_acceptance(m.get(), w.c_str(), &p));
    std::printf("%s\n", format_prob(p).c_str());
    return 0;
}

int cmd_table(const std::string& ref, int max_len) {
    const MachinePtr m = open_machine(ref);
    const char* alphabet = nullptr;
    check(qfasim_machine_alphabet(m.get(), &alphabet));
    const std::string symbols = alphabet;
    for (int len = 0; len <= max_len; ++len) {
        std::vector<std::size_t> odometer(static_cast<std::size_t>(len), 0);
        bool more = true;
        while (more) {
            std::string w;
            for (std::size_t digit : odometer) {
                w.push_back(symbols[digit]);
            }
            double p = 0.0;
            check(qfasim_acceptance(m.get(), w.c_str(), &p));
            std::printf("%s\t%s\n", w.c_str(), format_prob(p).c_str());
            more = false;
            for (std::size_t i = odometer.size(); i-- > 0;) {
                if (++odometer[i] < symbols.size()) {
                    more = true;
                    break;
                }
                odometer[i] = 0;
            }
        }
    }
    return 0;
}

int cmd_cutpoint(const std::string& ref, const std::string& w, double lambda) {
    const MachinePtr m = open_machine(ref);
    int verdict = 0;
    double p = 0.0;
    check(qfasim_cutpoint(m.get(), w.c_str(), lambda, &verdict, &p));
    const char* name = verdict > 0 ? "member" : (verdict < 0 ? "nonmember" : "at-cutpoint");
    std::printf("%s\t%s\n", name, format_prob(p).c_str());
    return verdict > 0 ? 0 : kExitVerdictReject;
}

int cmd_mc(const std::string& ref, const std::string& w, std::uint64_t trials,
           std::uint64_t seed) {
    const MachinePtr m = open_machine(ref);
    double freq = 0.0;
    int outlier = 0;
    check(qfasim_monte_carlo(m.get(), w.c_str(), trials, seed, &freq, &outlier));
    std::printf("%s\n", format_prob(freq).c_str());
    if (outlier) {
        std::fprintf(stderr, "warning: frequency is more than 5 sigma from the exact value\n");
    }
    return 0;
}

int cmd_show(const std::string& ref) {
    const MachinePtr m = open_machine(ref);
    char* text = nullptr;
    check(qfasim_machine_to_json(m.get(), &text));
    std::fputs(text, stdout);
    qfasim_string_free(text);
    return 0;
}

int cmd_eq_run(const std::string& w, int rounds, std::uint64_t seed, int pass_mode,
               int accept_mode) {
    qfasim_eq_report report;
    check(qfasim_eq_simulate(w.c_str(), rounds, seed, pass_mode, accept_mode, &report));
    std::printf("%s\tpasses=%" PRIu64 "\tdelta=%" PRId64 "\n",
                report.accepted ? "accept" : "reject", report.passes_used, report.delta);
    return report.accepted ? 0 : kExitVerdictReject;
}

int cmd_eq_exact(const std::string& w) {
    double rejection = 0.0;
    check(qfasim_eq_exact_rejection(w.c_str(), &rejection));
    std::printf("%s\n", format_prob(rejection).c_str());
    return 0;
}

int cmd_eq_sweep(int max_len) {
    for (int len = 0; len <= max_len; ++len) {
        std::vector<int> odometer(static_cast<std::size_t>(len), 0);
        bool more = true;
        while (more) {
            std::string w;
            for (int digit : odometer) {
                w.push_back(digit == 0 ? 'a' : 'b');
            }
            double rejection = 0.0;
            check(qfasim_eq_exact_rejection(w.c_str(), &rejection));
            std::printf("%s\t%s\n", w.c_str(), format_prob(rejection).c_str());
            more = false;
            for (std::size_t i = odometer.size(); i-- > 0;) {
                if (++odometer[i] < 2) {
                    more = true;
                    break;
                }
                odometer[i] = 0;
            }
        }
    }
    return 0;
}

int cmd_walk_absorb(std::int64_t n, std::int64_t start) {
    double p = 0.0;
    check(qfasim_walk_right_absorption(n, start, &p));
    std::printf("%s\n", format_prob(p).c_str());
    return 0;
}

int cmd_walk_gadget(std::int64_t n) {
    double acceptance = 0.0;
    double target = 0.0;
    double ratio = 0.0;
    check(qfasim_walk_gadget(n, &acceptance, &target, &ratio));
    std::printf("acceptance\t%s\n", format_prob(acceptance).c_str());
    std::printf("target\t%s\n", format_prob(target).c_str());
    std::printf("ratio\t%.15g\n", ratio);
    return 0;
}

void verify_printer(const char* name, int pass, const char* detail, void* user) {
    (void)user;
    std::printf("%-32s %s  (%s)\n", name, pass ? "pass" : "FAIL", detail);
}

int cmd_verify() {
    int failures = 0;
    check(qfasim_verify(verify_printer, nullptr, &failures));
    std::printf("%d failure(s)\n", failures);
    return failures == 0 ? 0 : kExitVerdictReject;
}

// ---- demos ----------------------------------------------------------------

int demo_rotation() {
    std::printf("Rotation machine with cos(theta) = 3/5: f(a^k) = cos^2(k*theta)\n");
    const double theta = std::acos(0.6);
    const MachinePtr m = open_machine("rot:theta=" + std::to_string(theta));
    std::printf("k\tsimulated\tclosed form\n");
    for (int k = 0; k <= 10; ++k) {
        double p = 0.0;
        check(qfasim_acceptance(m.get(), std::string(static_cast<std::size_t>(k), 'a').c_str(),
                                &p));
        const double c = std::cos(k * theta);
        std::printf("%d\t%s\t%s\n", k, format_prob(p).c_str(), format_prob(c * c).c_str());
    }
    return 0;
}

int demo_cutpoints() {
    std::printf("Any two cutpoints over the 3/5 rotation machine are separated by some a^k\n");
    const MachinePtr m = open_machine("rot:theta=" + std::to_string(std::acos(0.6)));
    const double pairs[][2] = {{0.10, 0.12}, {0.50, 0.51}, {0.98, 0.99}};
    std::printf("lambda1\tlambda2\twitness k\tf(a^k)\n");
    for (const auto& pair : pairs) {
        std::uint64_t k = 0;
        double p = 0.0;
        check(qfasim_separate_cutpoints(m.get(), pair[0], pair[1], 1000000, &k, &p));
        std::printf("%.2f\t%.2f\t%" PRIu64 "\t%s\n", pair[0], pair[1], k,
                    format_prob(p).c_str());
    }
    return 0;
}

int demo_neq() {
    std::printf("Unequal-counts machine: f(w) = 0 exactly when |w|_a = |w|_b\n");
    const MachinePtr m = open_machine("neq");
    const char* words[] = {"", "a", "b", "ab", "ba", "aab", "aabb", "abab", "aaabbb", "ababab"};
    std::printf("w\tf(w)\n");
    for (const char* w : words) {
        double p = 0.0;
        check(qfasim_acceptance(m.get(), w, &p));
        std::printf("%s\t%s\n", *w ? w : "(empty)", format_prob(p).c_str());
    }
    return 0;
}

int demo_evenodd() {
    std::printf("Even/odd promise problem, k = 1: f(a^(2j)) is 1 for even j, 0 for odd j\n");
    const MachinePtr m = open_machine("evenodd:k=1");
    std::printf("j\t|w|\tf\n");
    for (int j = 0; j <= 8; ++j) {
        const std::string w(static_cast<std::size_t>(2 * j), 'a');
        double p = 0.0;
        check(qfasim_acceptance(m.get(), w.c_str(), &p));
        std::printf("%d\t%zu\t%s\n", j, w.size(), format_prob(p).c_str());
    }
    std::printf("\nSmallest deterministic automaton solving the same promise problem:\n");
    for (int k = 1; k <= 2; ++k) {
        int states = 0;
        check(qfasim_evenodd_min_dfa_search(k, k == 1 ? 6 : 10, &states));
        std::printf("k=%d\t%d states (the quantum machine uses 2)\n", k, states);
    }
    return 0;
}

int demo_modp() {
    std::printf("Multiples of p = 11: members exact, non-members below cos^2(pi/p)\n");
    const MachinePtr m = open_machine("modp:p=11");
    const double bound = std::cos(M_PI / 11.0) * std::cos(M_PI / 11.0);
    std::printf("m\tf(a^m)\n");
    double worst = 0.0;
    for (int len = 0; len <= 22; ++len) {
        double p = 0.0;
        check(qfasim_acceptance(m.get(), std::string(static_cast<std::size_t>(len), 'a').c_str(),
                                &p));
        std::printf("%d\t%s\n", len, format_prob(p).c_str());
        if (len % 11 != 0 && p > worst) {
            worst = p;
        }
    }
    std::printf("worst non-member acceptance %s <= bound %s\n", format_prob(worst).c_str(),
                format_prob(bound).c_str());
    return 0;
}

int demo_composite() {
    std::printf("Composite machine for p = 31: random coefficient search, then tensor build\n");
    const std::uint64_t p = 31;
    const int d = 4;
    std::uint64_t coefficients[4] = {0, 0, 0, 0};
    double worst = 0.0;
    check(qfasim_modp_composite_search(p, d, 0.25, 7, 100000, coefficients, &worst));
    std::printf("coefficients");
    for (int i = 0; i < d; ++i) {
        std::printf(" %" PRIu64, coefficients[i]);
    }
    std::printf("\nworst non-member acceptance %s (< 0.25)\n", format_prob(worst).c_str());
    qfasim_machine* raw = nullptr;
    check(qfasim_machine_open_composite(p, coefficients, d, &raw));
    const MachinePtr m(raw);
    int64_t states = 0;
    check(qfasim_machine_state_count(m.get(), &states));
    std::printf("states %" PRId64 "\n", states);
    std::printf("m\tf(a^m)\n");
    for (std::uint64_t len : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{5}, p, 2 * p}) {
        double f = 0.0;
        check(qfasim_acceptance(m.get(), std::string(len, 'a').c_str(), &f));
        std::printf("%" PRIu64 "\t%s\n", len, format_prob(f).c_str());
    }
    return 0;
}

int demo_eq() {
    std::printf("Two-way equal-counts decider: exact rejection and 2000-seed simulation\n");
    std::printf("w\texact\tempirical (t=1)\n");
    for (const char* w : {"ab", "aab", "aaab", "abba"}) {
        double exact = 0.0;
        check(qfasim_eq_exact_rejection(w, &exact));
        int rejected = 0;
        for (int seed = 0; seed < 2000; ++seed) {
            qfasim_eq_report report;
            check(qfasim_eq_simulate(w, 1, static_cast<std::uint64_t>(seed), 0, 0, &report));
            rejected += report.accepted ? 0 : 1;
        }
        std::printf("%s\t%s\t%s\n", w, format_prob(exact).c_str(),
                    format_prob(rejected / 2000.0).c_str());
    }
    return 0;
}

int demo_walk() {
    std::printf("Random-walk acceptance gadget: two walks vs the 1/(4n^2) target\n");
    std::printf("n\tP(right)\tgadget\ttarget\tratio\n");
    for (std::int64_t n : {1, 2, 5, 10}) {
        double right = 0.0;
        check(qfasim_walk_right_absorption(n, 1, &right));
        double acceptance = 0.0;
        double target = 0.0;
        double ratio = 0.0;
        check(qfasim_walk_gadget(n, &acceptance, &target, &ratio));
        std::printf("%" PRId64 "\t%s\t%s\t%s\t%.6f\n", n, format_prob(right).c_str(),
                    format_prob(acceptance).c_str(), format_prob(target).c_str(), ratio);
    }
    return 0;
}

int cmd_demo(const std::string& name) {
    if (name == "rotation") return demo_rotation();
    if (name == "cutpoints") return demo_cutpoints();
    if (name == "neq") return demo_neq();
    if (name == "evenodd") return demo_evenodd();
    if (name == "modp") return demo_modp();
    if (name == "composite") return demo_composite();
    if (name == "eq") return demo_eq();
    if (name == "walk") return demo_walk();
    std::fprintf(stderr,
                 "error: unknown demo '%s' (available: rotation, cutpoints, neq, evenodd, "
                 "modp, composite, eq, walk)\n",
                 name.c_str());
    return kExitError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qfasim: classical and quantum finite automata simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(qfasim_version()); });

    std::string machine_ref;
    std::string word;
    double lambda = 0.0;
    int max_len = 8;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    int rounds = 1;
    std::string pass_mode = "analytic";
    std::string accept_mode = "bernoulli";
    std::int64_t walk_n = 1;
    std::int64_t walk_start = 1;
    std::string demo_name;

    auto* prob = app.add_subcommand("prob", "Print the exact acceptance probability");
    prob->add_option("machine", machine_ref, "Catalog name or machine file")->required();
    prob->add_option("string", word, "Input string (may be empty)");

    auto* table = app.add_subcommand("table", "Probability of every string up to a length");
    table->add_option("machine", machine_ref)->required();
    table->add_option("--max-len", max_len, "Longest string to include")
        ->check(CLI::Range(0, 20));

    auto* cutpoint = app.add_subcommand(
        "cutpoint", "Classify a string against a cutpoint (exit 1 unless member)");
    cutpoint->add_option("machine", machine_ref)->required();
    cutpoint->add_option("string", word);
    cutpoint->add_option("lambda", lambda, "Cutpoint in [0,1]")->required();

    auto* mc = app.add_subcommand("mc", "Empirical acceptance frequency over seeded trials");
    mc->add_option("machine", machine_ref)->required();
    mc->add_option("string", word);
    mc->add_option("--trials", trials, "Number of measurements");
    mc->add_option("--seed", seed, "RNG seed")->envname("QFASIM_SEED");

    auto* show = app.add_subcommand("show", "Print the machine as JSON");
    show->add_option("machine", machine_ref)->required();

    auto* eq = app.add_subcommand("eq", "Two-way equal-counts decider");
    eq->require_subcommand(1);
    auto* eq_run = eq->add_subcommand("run", "Simulate one decision (exit 1 on reject)");
    eq_run->add_option("string", word)->required();
    eq_run->add_option("--rounds", rounds, "Amplification rounds")->check(CLI::PositiveNumber);
    eq_run->add_option("--seed", seed, "RNG seed")->envname("QFASIM_SEED");
    eq_run->add_option("--pass-mode", pass_mode, "analytic or stepping")
        ->check(CLI::IsMember({"analytic", "stepping"}));
    eq_run->add_option("--accept-mode", accept_mode, "bernoulli or walk")
        ->check(CLI::IsMember({"bernoulli", "walk"}));
    auto* eq_exact = eq->add_subcommand("exact", "Closed-form rejection probability");
    eq_exact->add_option("string", word)->required();
    auto* eq_sweep =
        eq->add_subcommand("sweep", "Rejection probability of every string up to a length");
    eq_sweep->add_option("--max-len", max_len)->check(CLI::Range(0, 16));

    auto* walk = app.add_subcommand("walk", "Fair random walk between absorbing barriers");
    walk->require_subcommand(1);
    auto* walk_absorb =
        walk->add_subcommand("absorb", "Right-barrier absorption probability");
    walk_absorb->add_option("--n", walk_n, "Cells between the barriers")->required();
    walk_absorb->add_option("--start", walk_start, "Start position (1-based)");
    auto* walk_gadget = walk->add_subcommand("gadget", "Two-walk acceptance gadget");
    walk_gadget->add_option("--n", walk_n, "Input length")->required();

    auto* verify = app.add_subcommand("verify", "Run the library invariant suite");

    auto* demo = app.add_subcommand("demo", "Reproduce a worked example");
    demo->add_option("name", demo_name,
                     "rotation, cutpoints, neq, evenodd, modp, composite, eq, walk")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    if (prob->parsed()) return cmd_prob(machine_ref, word);
    if (table->parsed()) return cmd_table(machine_ref, max_len);
    if (cutpoint->parsed()) return cmd_cutpoint(machine_ref, word, lambda);
    if (mc->parsed()) return cmd_mc(machine_ref, word, trials, seed);
    if (show->parsed()) return cmd_show(machine_ref);
    if (eq->parsed()) {
        if (eq_run->parsed()) {
            return cmd_eq_run(word, rounds, seed, pass_mode == "analytic" ? 0 : 1,
                              accept_mode == "bernoulli" ? 0 : 1);
        }
        if (eq_exact->parsed()) return cmd_eq_exact(word);
        if (eq_sweep->parsed()) return cmd_eq_sweep(max_len);
    }
    if (walk->parsed()) {
        if (walk_absorb->parsed()) return cmd_walk_absorb(walk_n, walk_start);
        if (walk_gadget->parsed()) return cmd_walk_gadget(walk_n);
    }
    if (verify->parsed()) return cmd_verify();
    if (demo->parsed()) return cmd_demo(demo_name);
    return kExitError;
}
