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

#include "qfasim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "qfasim/catalog.hpp"
#include "qfasim/errors.hpp"
#include "qfasim/general.hpp"
#include "qfasim/machine.hpp"
#include "qfasim/random.hpp"
#include "qfasim/serialize.hpp"
#include "qfasim/two_way.hpp"

namespace qfasim {

namespace {

constexpr std::uint64_t kVerifySeed = 0x0f2a5ce1d9b47e63ULL;

std::string format_deviation(double dev) {
    std::ostringstream out;
    out.precision(3);
    out << "worst deviation " << dev;
    return out.str();
}

/// Runs `body`, which reports a worst deviation; passes when the deviation
/// stays within `bound`.
VerifyResult deviation_check(const std::string& name, double bound,
                             const std::function<double()>& body) {
    try {
        const double dev = body();
        return {name, dev <= bound, format_deviation(dev)};
    } catch (const Error& e) {
        return {name, false, std::string("error: ") + e.what()};
    }
}

/// Runs `body`, which returns an empty string on success or a description
/// of the first violation.
VerifyResult witness_check(const std::string& name, const std::function<std::string()>& body) {
    try {
        const std::string violation = body();
        return {name, violation.empty(), violation.empty() ? "ok" : violation};
    } catch (const Error& e) {
        return {name, false, std::string("error: ") + e.what()};
    }
}

double check_unitary_preserves_norm() {
    std::mt19937_64 rng(kVerifySeed);
    double worst = 0.0;
    for (int round = 0; round < 60; ++round) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 5);
        const UnitaryOperator u = random_unitary(n, rng);
        const PureState s = random_pure_state(n, rng);
        const PureState out = apply_unitary(u, s);
        worst = std::max(worst, std::abs(out.amplitudes().norm() - 1.0));
    }
    return worst;
}

double check_channel_preserves_density() {
    std::mt19937_64 rng(kVerifySeed + 1);
    double worst = 0.0;
    for (int round = 0; round < 60; ++round) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 4);
        const std::size_t l = 1 + rng() % 4;
        const Superoperator e = random_superoperator(n, l, rng);
        const DensityMatrix rho = random_density(n, rng);
        // The constructor inside apply_superoperator re-checks trace,
        // Hermiticity, and positive semidefiniteness.
        const DensityMatrix out = apply_superoperator(e, rho);
        worst = std::max(worst, std::abs(out.entries().trace().real() - 1.0));
    }
    return worst;
}

double check_measure_distribution() {
    std::mt19937_64 rng(kVerifySeed + 2);
    double worst = 0.0;
    for (int round = 0; round < 60; ++round) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 5);
        const PureState s = random_pure_state(n, rng);
        // Random partition: cut the indices into 1..n blocks.
        std::vector<std::vector<Eigen::Index>> blocks(1 + rng() % static_cast<std::uint64_t>(n));
        for (Eigen::Index j = 0; j < n; ++j) {
            blocks[rng() % blocks.size()].push_back(j);
        }
        std::erase_if(blocks, [](const auto& b) { return b.empty(); });
        const MeasurementPartition p(n, blocks);
        double total = 0.0;
        for (const MeasurementOutcome& o : measure(s, p)) {
            if (o.probability < -kNormTol) {
                return 1.0;
            }
            total += o.probability;
            if (o.collapsed) {
                worst = std::max(worst, std::abs(o.collapsed->amplitudes().norm() - 1.0));
            }
        }
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return worst;
}

double check_rotation_additivity() {
    std::mt19937_64 rng(kVerifySeed + 3);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    double worst = 0.0;
    for (int round = 0; round < 200; ++round) {
        const double t1 = angle(rng);
        const double t2 = angle(rng);
        const CMatrix lhs =
            rotation_operator(t1).entries() * rotation_operator(t2).entries();
        const CMatrix rhs = rotation_operator(t1 + t2).entries();
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst;
}

double check_unitary_channel_consistency() {
    std::mt19937_64 rng(kVerifySeed + 4);
    double worst = 0.0;
    for (int round = 0; round < 60; ++round) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 5);
        const UnitaryOperator u = random_unitary(n, rng);
        const PureState s = random_pure_state(n, rng);
        const DensityMatrix via_channel =
            apply_superoperator(superoperator_from_unitary(u), density_from_pure(s));
        const DensityMatrix via_pure = density_from_pure(apply_unitary(u, s));
        worst = std::max(worst,
                         (via_channel.entries() - via_pure.entries()).cwiseAbs().maxCoeff());
    }
    return worst;
}

double check_pfa_acceptance_range() {
    std::mt19937_64 rng(kVerifySeed + 5);
    double worst = 0.0;
    for (int round = 0; round < 40; ++round) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 5);
        const RtPFA m({'a', 'b'},
                      {{'a', random_stochastic(n, rng)}, {'b', random_stochastic(n, rng)}},
                      {0});
        const std::string w = random_string({'a', 'b'}, rng() % 51, rng);
        const double f = pfa_acceptance(m, w);
        worst = std::max(worst, std::max(-f, f - 1.0));
    }
    return std::max(worst, 0.0);
}

std::string check_dfa_pfa_agreement() {
    std::mt19937_64 rng(kVerifySeed + 6);
    for (int round = 0; round < 40; ++round) {
        const int m_states = 2 + static_cast<int>(rng() % 5);
        std::vector<Eigen::Index> accepting;
        for (Eigen::Index q = 0; q < m_states; ++q) {
            if (rng() % 2 == 0) {
                accepting.push_back(q);
            }
        }
        const int tail = static_cast<int>(rng() % static_cast<std::uint64_t>(m_states));
        const RtDFA dfa = unary_lasso_dfa(tail, m_states - tail, accepting);
        for (std::size_t len = 0; len <= 12; ++len) {
            const std::string w(len, 'a');
            const double f = pfa_acceptance(dfa.as_pfa(), w);
            const bool b = dfa_accepts(dfa, w);
            if (std::abs(f - (b ? 1.0 : 0.0)) > kNormTol) {
                return "mismatch on a^" + std::to_string(len);
            }
        }
    }
    return "";
}

std::string check_rotation_law() {
    const double thetas[] = {std::numbers::pi / 8.0, std::numbers::pi / 32.0,
                             2.0 * std::numbers::pi / 7.0,
                             std::numbers::sqrt2 * std::numbers::pi / 3.0};
    for (double theta : thetas) {
        const MeasureOnceQFA m = rotation_machine(theta);
        const UnitaryOperator& u = m.transition('a');
        CVector psi = PureState::basis(2, 0).amplitudes();
        for (int k = 0; k <= 2000; ++k) {
            const double f = std::norm(psi(0));
            const double c = std::cos(static_cast<double>(k) * theta);
            if (std::abs(f - c * c) > kNormTol) {
                return "theta=" + std::to_string(theta) + " k=" + std::to_string(k);
            }
            psi = u.entries() * psi;
        }
    }
    return "";
}

std::string check_neq_zero_iff_balanced() {
    const MeasureOnceQFA m = neq_machine();
    std::vector<std::string> frontier = {""};
    for (std::size_t len = 0; len <= 12; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : frontier) {
            const double f = qfa_acceptance(m, w);
            const auto balance = std::count(w.begin(), w.end(), 'a') * 2 ==
                                 static_cast<std::ptrdiff_t>(w.size());
            if (balance != (f <= kProbTol)) {
                return "string '" + w + "' f=" + std::to_string(f);
            }
            if (w.size() < 12) {
                next.push_back(w + 'a');
                next.push_back(w + 'b');
            }
        }
        frontier = std::move(next);
    }
    return "";
}

double check_random_unitary_acceptance_range() {
    std::mt19937_64 rng(kVerifySeed + 7);
    double worst = 0.0;
    for (int round = 0; round < 40; ++round) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 5);
        std::set<Eigen::Index> accepting;
        accepting.insert(static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(n)));
        const MeasureOnceQFA m({'a', 'b'},
                               {{'a', random_unitary(n, rng)}, {'b', random_unitary(n, rng)}},
                               accepting);
        const std::string w = random_string({'a', 'b'}, rng() % 40, rng);
        const double f = qfa_acceptance(m, w);
        worst = std::max(worst, std::max(-f, f - 1.0));
    }
    return std::max(worst, 0.0);
}

std::string check_cutpoint_monotone() {
    std::mt19937_64 rng(kVerifySeed + 8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const MeasureOnceQFA m = rotation_machine(std::acos(0.6));
    for (int round = 0; round < 200; ++round) {
        const std::string w(rng() % 60, 'a');
        double l1 = unit(rng);
        double l2 = unit(rng);
        if (l1 > l2) {
            std::swap(l1, l2);
        }
        const CutpointClass low = classify_cutpoint(m, w, l1).cls;
        const CutpointClass high = classify_cutpoint(m, w, l2).cls;
        if (low == CutpointClass::nonmember && high == CutpointClass::member) {
            return "verdict rose from nonmember to member on a^" + std::to_string(w.size());
        }
    }
    return "";
}

std::string check_catalog_validates() {
    rotation_machine(0.0);
    rotation_machine(std::acos(0.6));
    for (int k = 1; k <= 10; ++k) {
        evenodd_machine(k);
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31}) {
        modp_machine(p);
    }
    modp_composite(5, {1, 2, 3});
    neq_machine();
    return "";
}

std::string check_modp_rejection_bound() {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31}) {
        const MeasureOnceQFA m = modp_machine(p);
        const double floor_rej = std::sin(std::numbers::pi / static_cast<double>(p)) *
                                 std::sin(std::numbers::pi / static_cast<double>(p));
        for (std::uint64_t len = 0; len <= 5 * p; ++len) {
            const double f = qfa_acceptance(m, std::string(len, 'a'));
            if (len % p == 0) {
                if (f < 1.0 - kNormTol) {
                    return "p=" + std::to_string(p) + " member a^" + std::to_string(len);
                }
            } else if (1.0 - f < floor_rej - kNormTol) {
                return "p=" + std::to_string(p) + " non-member a^" + std::to_string(len);
            }
        }
    }
    return "";
}

std::string check_evenodd_promise() {
    for (int k = 1; k <= 10; ++k) {
        const MeasureOnceQFA m = evenodd_machine(k);
        std::vector<std::string> yes;
        std::vector<std::string> no;
        for (int j = 0; j <= 20; ++j) {
            const std::size_t len = static_cast<std::size_t>(j) << k;
            (j % 2 == 0 ? yes : no).push_back(std::string(len, 'a'));
        }
        const PromiseCheckResult r = promise_check_exact(m, yes, no);
        if (!r.exact) {
            return "k=" + std::to_string(k) + " deviation " + std::to_string(r.worst_deviation);
        }
    }
    return "";
}

double check_composite_product() {
    std::mt19937_64 rng(kVerifySeed + 9);
    double worst = 0.0;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p = (round % 2 == 0) ? 7 : 11;
        std::vector<std::uint64_t> coeffs(2 + rng() % 3);
        for (auto& k : coeffs) {
            k = 1 + rng() % (p - 1);
        }
        const MeasureOnceQFA composite = modp_composite(p, coeffs);
        std::vector<MeasureOnceQFA> parts;
        for (std::uint64_t k : coeffs) {
            parts.push_back(rotation_machine(2.0 * std::numbers::pi *
                                             static_cast<double>(k) / static_cast<double>(p)));
        }
        for (std::uint64_t len = 0; len <= 5 * p; ++len) {
            const std::string w(len, 'a');
            double product = 1.0;
            for (const MeasureOnceQFA& part : parts) {
                product *= qfa_acceptance(part, w);
            }
            worst = std::max(worst, std::abs(qfa_acceptance(composite, w) - product));
        }
    }
    return worst;
}

std::string check_pass_rotation_bound() {
    for (int k = 1; k <= 10000; ++k) {
        const double lhs =
            std::abs(std::sin(static_cast<double>(k) * std::numbers::sqrt2 * std::numbers::pi));
        const double rhs = 1.0 / (std::numbers::sqrt2 * static_cast<double>(k));
        if (lhs < rhs) {
            return "k=" + std::to_string(k);
        }
    }
    return "";
}

std::string check_eq_rejection_two_thirds() {
    std::vector<std::string> frontier = {""};
    for (std::size_t len = 1; len <= 12; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : frontier) {
            next.push_back(w + 'a');
            next.push_back(w + 'b');
        }
        frontier = std::move(next);
        for (const std::string& w : frontier) {
            const double rej = eq_exact_rejection(w);
            const bool member =
                std::count(w.begin(), w.end(), 'a') * 2 == static_cast<std::ptrdiff_t>(w.size());
            if (member && rej != 0.0) {
                return "member '" + w + "' rejected with probability " + std::to_string(rej);
            }
            if (!member && rej < 2.0 / 3.0 - kNormTol) {
                return "non-member '" + w + "' rejection " + std::to_string(rej);
            }
        }
    }
    return "";
}

std::string check_eq_simulation_matches_exact() {
    for (const std::string& w : {std::string("a"), std::string("aab"), std::string("aabbb")}) {
        const double exact = eq_exact_rejection(w);
        const int trials = 4000;
        int rejected = 0;
        for (int i = 0; i < trials; ++i) {
            const EqRunReport r = eq_simulate(w, 1, derive_stream(kVerifySeed + 10, i));
            rejected += r.accepted ? 0 : 1;
        }
        const double freq = static_cast<double>(rejected) / trials;
        const double sigma = std::sqrt(exact * (1.0 - exact) / trials);
        if (std::abs(freq - exact) > 5.0 * sigma + kProbTol) {
            return "'" + w + "' empirical " + std::to_string(freq) + " vs exact " +
                   std::to_string(exact);
        }
    }
    // Member runs halt by the accept step alone; their pass count is
    // geometric with mean 4|w|^2.
    const std::string member = "abab";
    const int trials = 4000;
    std::uint64_t total_passes = 0;
    for (int i = 0; i < trials; ++i) {
        const EqRunReport r = eq_simulate(member, 1, derive_stream(kVerifySeed + 11, i));
        if (!r.accepted) {
            return "member '" + member + "' rejected";
        }
        total_passes += r.passes_used;
    }
    const double mean = static_cast<double>(total_passes) / trials;
    const double expect = 4.0 * 16.0;
    if (std::abs(mean - expect) > 0.1 * expect) {
        return "member mean passes " + std::to_string(mean) + " vs " + std::to_string(expect);
    }
    return "";
}

std::string check_walk_absorption() {
    for (std::int64_t n : {1, 2, 5, 12, 20}) {
        for (std::int64_t start = 1; start <= n; ++start) {
            const double exact = walk_right_absorption({n, start});
            const double closed = static_cast<double>(start) / static_cast<double>(n + 1);
            if (std::abs(exact - closed) > kNormTol) {
                return "linear solve off at n=" + std::to_string(n) +
                       " start=" + std::to_string(start);
            }
        }
        const int trials = 20000;
        int rights = 0;
        for (int i = 0; i < trials; ++i) {
            rights += walk_simulate({n, 1}, derive_stream(kVerifySeed + 12, i)).right_absorbed;
        }
        const double exact = 1.0 / static_cast<double>(n + 1);
        const double freq = static_cast<double>(rights) / trials;
        const double sigma = std::sqrt(exact * (1.0 - exact) / trials);
        if (std::abs(freq - exact) > 5.0 * sigma) {
            return "trajectories off at n=" + std::to_string(n);
        }
    }
    return "";
}

double check_pfa_embedding() {
    std::mt19937_64 rng(kVerifySeed + 13);
    double worst = 0.0;
    for (int round = 0; round < 30; ++round) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 5);
        std::vector<Eigen::Index> accepting;
        for (Eigen::Index q = 0; q < n; ++q) {
            if (rng() % 2 == 0) {
                accepting.push_back(q);
            }
        }
        const RtPFA p({'a', 'b'},
                      {{'a', random_stochastic(n, rng)}, {'b', random_stochastic(n, rng)}},
                      accepting);
        const GeneralQFA g = pfa_to_gqfa(p);
        for (int s = 0; s < 30; ++s) {
            const std::string w = random_string({'a', 'b'}, rng() % 13, rng);
            worst = std::max(worst, std::abs(gqfa_acceptance(g, w) - pfa_acceptance(p, w)));
        }
    }
    return worst;
}

double check_unitary_embedding() {
    double worst = 0.0;
    const MeasureOnceQFA machines[] = {rotation_machine(std::acos(0.6)), evenodd_machine(2),
                                       modp_machine(7), neq_machine()};
    for (const MeasureOnceQFA& m : machines) {
        const GeneralQFA g = unitary_to_gqfa(m);
        std::mt19937_64 rng(kVerifySeed + 14);
        for (int s = 0; s < 40; ++s) {
            const std::string w = random_string(m.alphabet(), rng() % 30, rng);
            worst = std::max(worst, std::abs(gqfa_acceptance(g, w) - qfa_acceptance(m, w)));
        }
    }
    return worst;
}

double check_compose_product() {
    double worst = 0.0;
    const GeneralQFA g1 = unitary_to_gqfa(rotation_machine(std::acos(0.6)));
    const GeneralQFA g2 = unitary_to_gqfa(rotation_machine(2.0 * std::numbers::pi / 7.0));
    const GeneralQFA both = parallel_compose(g1, g2, AcceptRule::conjunction);
    for (std::size_t k = 0; k <= 50; ++k) {
        const std::string w(k, 'a');
        const double product = gqfa_acceptance(g1, w) * gqfa_acceptance(g2, w);
        worst = std::max(worst, std::abs(gqfa_acceptance(both, w) - product));
    }
    return worst;
}

std::string check_serialization_round_trip() {
    std::mt19937_64 rng(kVerifySeed + 15);
    std::vector<Machine> machines;
    machines.emplace_back(neq_machine());
    machines.emplace_back(modp_machine(5));
    machines.emplace_back(
        RtPFA({'a', 'b'}, {{'a', random_stochastic(3, rng)}, {'b', random_stochastic(3, rng)}},
              {1}));
    machines.emplace_back(unary_lasso_dfa(1, 3, {0, 2}));
    {
        std::map<char, Superoperator> channels;
        channels.emplace('a', random_superoperator(3, 2, rng));
        channels.emplace('b', random_superoperator(3, 3, rng));
        machines.emplace_back(GeneralQFA({'a', 'b'}, std::move(channels), {0, 2}));
    }
    std::vector<std::string> probes;
    for (int i = 0; i < 12; ++i) {
        probes.push_back(random_string({'a', 'b'}, static_cast<std::size_t>(i), rng));
    }
    for (const Machine& m : machines) {
        const std::string text = machine_to_json_text(m);
        const Machine back = machine_from_json_text(text);
        if (machine_to_json_text(back) != text) {
            return std::string(machine_kind_name(machine_kind(m))) +
                   " text changed after one round trip";
        }
        const auto& alphabet = machine_alphabet(m);
        for (const std::string& probe : probes) {
            std::string w = probe;
            if (alphabet.size() == 1) {
                w = std::string(probe.size(), alphabet[0]);
            }
            if (machine_acceptance(m, w) != machine_acceptance(back, w)) {
                return std::string(machine_kind_name(machine_kind(m))) +
                       " acceptance changed on '" + w + "'";
            }
        }
    }
    return "";
}

} // namespace

std::vector<VerifyResult> run_verification() {
    std::vector<VerifyResult> results;
    results.push_back(deviation_check("unitary-preserves-norm", kNormTol,
                                      check_unitary_preserves_norm));
    results.push_back(deviation_check("channel-preserves-density", kNormTol,
                                      check_channel_preserves_density));
    results.push_back(deviation_check("measurement-distribution", kNormTol,
                                      check_measure_distribution));
    results.push_back(deviation_check("rotation-additivity", kNormTol,
                                      check_rotation_additivity));
    results.push_back(deviation_check("unitary-channel-consistency", kNormTol,
                                      check_unitary_channel_consistency));
    results.push_back(deviation_check("pfa-acceptance-range", kNormTol,
                                      check_pfa_acceptance_range));
    results.push_back(witness_check("dfa-pfa-agreement", check_dfa_pfa_agreement));
    results.push_back(witness_check("rotation-acceptance-law", check_rotation_law));
    results.push_back(witness_check("neq-zero-iff-balanced", check_neq_zero_iff_balanced));
    results.push_back(deviation_check("unitary-acceptance-range", kNormTol,
                                      check_random_unitary_acceptance_range));
    results.push_back(witness_check("cutpoint-monotone", check_cutpoint_monotone));
    results.push_back(witness_check("catalog-validates", check_catalog_validates));
    results.push_back(witness_check("modp-rejection-bound", check_modp_rejection_bound));
    results.push_back(witness_check("evenodd-promise-exact", check_evenodd_promise));
    results.push_back(deviation_check("composite-product-rule", kNormTol,
                                      check_composite_product));
    results.push_back(witness_check("pass-rotation-bound", check_pass_rotation_bound));
    results.push_back(witness_check("eq-rejection-two-thirds", check_eq_rejection_two_thirds));
    results.push_back(witness_check("eq-simulation-matches-exact",
                                    check_eq_simulation_matches_exact));
    results.push_back(witness_check("walk-absorption", check_walk_absorption));
    results.push_back(deviation_check("pfa-embedding-equivalence", kExactTol,
                                      check_pfa_embedding));
    results.push_back(deviation_check("unitary-embedding-equivalence", kExactTol,
                                      check_unitary_embedding));
    results.push_back(deviation_check("compose-product-rule", kNormTol,
                                      check_compose_product));
    results.push_back(witness_check("serialization-round-trip",
                                    check_serialization_round_trip));
    return results;
}

} // namespace qfasim
