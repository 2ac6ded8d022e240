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

#include "qfasim/catalog.hpp"

#include <cmath>
#include <numbers>

#include "qfasim/errors.hpp"
#include "qfasim/random.hpp"

namespace qfasim {

namespace {

constexpr double kPi = std::numbers::pi;

double modp_angle(std::uint64_t p, std::uint64_t coefficient) {
    return 2.0 * kPi * static_cast<double>(coefficient) / static_cast<double>(p);
}

} // namespace

MeasureOnceQFA rotation_machine(double theta) {
    return MeasureOnceQFA({'a'}, {{'a', rotation_operator(theta)}}, {0});
}

MeasureOnceQFA evenodd_machine(int k) {
    if (k < 1 || k > 50) {
        fail(ErrorCode::invalid_argument,
             "promise parameter k must lie in [1, 50], got " + std::to_string(k));
    }
    return rotation_machine(kPi / std::ldexp(1.0, k + 1));
}

bool is_prime(std::uint64_t p) {
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

MeasureOnceQFA modp_machine(std::uint64_t p) {
    if (!is_prime(p)) {
        fail(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
    }
    // 2*pi/2 = pi rotates to minus the start state and would accept every
    // string; the quarter turn separates even from odd counts exactly and
    // meets the cos^2(pi/2) = 0 error bound.
    const double theta = (p == 2) ? kPi / 2.0 : modp_angle(p, 1);
    return rotation_machine(theta);
}

MeasureOnceQFA modp_composite(std::uint64_t p, const std::vector<std::uint64_t>& coefficients) {
    if (!is_prime(p)) {
        fail(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
    }
    if (coefficients.empty()) {
        fail(ErrorCode::invalid_argument, "need at least one coefficient");
    }
    if (coefficients.size() > static_cast<std::size_t>(kMaxCompositeComponents)) {
        fail(ErrorCode::invalid_argument,
             "composite is capped at " + std::to_string(kMaxCompositeComponents) +
                 " components");
    }
    UnitaryOperator u(CMatrix::Identity(1, 1));
    for (std::uint64_t k : coefficients) {
        if (k < 1 || k >= p) {
            fail(ErrorCode::invalid_argument,
                 "coefficient " + std::to_string(k) + " outside [1, p-1]");
        }
        u = UnitaryOperator::tensor(u, rotation_operator(modp_angle(p, k)));
    }
    return MeasureOnceQFA({'a'}, {{'a', std::move(u)}}, {0});
}

double composite_worst_nonmember_acceptance(std::uint64_t p,
                                            const std::vector<std::uint64_t>& coefficients) {
    double worst = 0.0;
    for (std::uint64_t m = 1; m < p; ++m) {
        double f = 1.0;
        for (std::uint64_t k : coefficients) {
            const double c = std::cos(modp_angle(p, k) * static_cast<double>(m));
            f *= c * c;
        }
        worst = std::max(worst, f);
    }
    return worst;
}

std::optional<std::vector<std::uint64_t>> search_composite_coefficients(
    std::uint64_t p, int d, double epsilon, std::uint64_t seed, std::uint64_t attempts) {
    if (!is_prime(p)) {
        fail(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
    }
    if (d < 1 || d > kMaxCompositeComponents) {
        fail(ErrorCode::invalid_argument, "component count out of range");
    }
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        fail(ErrorCode::invalid_argument, "error target must lie in (0, 1]");
    }
    SplitMix64 gen(seed);
    for (std::uint64_t attempt = 0; attempt < attempts; ++attempt) {
        std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(d));
        for (auto& k : coeffs) {
            k = 1 + gen.next() % (p - 1);
        }
        if (composite_worst_nonmember_acceptance(p, coeffs) < epsilon) {
            return coeffs;
        }
    }
    return std::nullopt;
}

MeasureOnceQFA neq_machine() {
    const double theta = std::numbers::sqrt2 * kPi;
    return MeasureOnceQFA(
        {'a', 'b'},
        {{'a', rotation_operator(theta)}, {'b', rotation_operator(-theta)}},
        {1});
}

} // namespace qfasim
