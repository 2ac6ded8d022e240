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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qfasim/catalog.hpp"

using namespace qfasim;

namespace {

constexpr double kPi = std::numbers::pi;

std::string a_pow(std::uint64_t k) {
    return std::string(static_cast<std::size_t>(k), 'a');
}

} // namespace

TEST_CASE("a rotation machine follows the squared-cosine law") {
    const MeasureOnceQFA m = rotation_machine(0.3);
    for (int k = 0; k <= 100; ++k) {
        const double expected = std::pow(std::cos(k * 0.3), 2);
        CHECK(std::abs(qfa_acceptance(m, a_pow(k)) - expected) <= kExactTol);
    }
}

TEST_CASE("the zero rotation accepts everything with certainty") {
    const MeasureOnceQFA m = rotation_machine(0.0);
    for (int k = 0; k <= 50; ++k) {
        CHECK(qfa_acceptance(m, a_pow(k)) == 1.0);
    }
}

TEST_CASE("rotation machines have two states and a unary alphabet") {
    const MeasureOnceQFA m = rotation_machine(1.0);
    CHECK(m.state_count() == 2);
    CHECK(m.is_unary());
    CHECK(m.accepting() == std::set<Eigen::Index>{0});
}

TEST_CASE("the parity-promise machine is exact on its promise strings") {
    for (int k = 1; k <= 6; ++k) {
        const MeasureOnceQFA m = evenodd_machine(k);
        const std::uint64_t block = 1ULL << k;
        for (std::uint64_t j = 0; j <= 12; ++j) {
            const double f = qfa_acceptance(m, a_pow(j * block));
            if (j % 2 == 0) {
                CHECK(1.0 - f <= kExactTol);
            } else {
                CHECK(f <= kExactTol);
            }
        }
    }
}

TEST_CASE("the parity-promise parameter is range checked") {
    CHECK_THROWS_AS(evenodd_machine(0), Error);
    CHECK_THROWS_AS(evenodd_machine(51), Error);
    CHECK_NOTHROW(evenodd_machine(50));
}

TEST_CASE("primality testing matches the usual small cases") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(31));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("the mod-p machine accepts multiples of p with certainty") {
    for (const std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL}) {
        const MeasureOnceQFA m = modp_machine(p);
        for (std::uint64_t j = 0; j <= 6; ++j) {
            CHECK(1.0 - qfa_acceptance(m, a_pow(j * p)) <= kExactTol);
        }
    }
}

TEST_CASE("the mod-p machine meets the squared-cosine error bound") {
    for (const std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        const MeasureOnceQFA m = modp_machine(p);
        const double bound = std::pow(std::cos(kPi / static_cast<double>(p)), 2);
        for (std::uint64_t mlen = 1; mlen <= 5 * p; ++mlen) {
            if (mlen % p == 0) {
                continue;
            }
            CHECK(qfa_acceptance(m, a_pow(mlen)) <= bound + kExactTol);
        }
    }
}

TEST_CASE("mod-p acceptance values match closed forms") {
    CHECK(std::abs(qfa_acceptance(modp_machine(3), "a") - 0.25) <= 1e-12);
    CHECK(std::abs(qfa_acceptance(modp_machine(5), "a") - 0.09549150281252630) <= 1e-12);
    CHECK(std::abs(qfa_acceptance(modp_machine(5), "aa") - 0.65450849718747361) <= 1e-12);
    // p = 2 uses the quarter turn, so odd counts are rejected exactly.
    CHECK(qfa_acceptance(modp_machine(2), "a") <= kExactTol);
    CHECK(1.0 - qfa_acceptance(modp_machine(2), "aa") <= kExactTol);
}

TEST_CASE("composite parameters must be prime") {
    CHECK_THROWS_AS(modp_machine(1), Error);
    CHECK_THROWS_AS(modp_machine(9), Error);
    CHECK_THROWS_AS(modp_composite(9, {1}), Error);
    CHECK_THROWS_AS(search_composite_coefficients(9, 2, 0.5, 1, 10), Error);
}

TEST_CASE("a composite machine tensors one qubit per coefficient") {
    const MeasureOnceQFA m = modp_composite(7, {1, 3, 5});
    CHECK(m.state_count() == 8);
    CHECK(m.accepting() == std::set<Eigen::Index>{0});
}

TEST_CASE("composite acceptance is the product of the component laws") {
    const std::vector<std::uint64_t> coeffs{1, 3};
    const MeasureOnceQFA m = modp_composite(7, coeffs);
    for (std::uint64_t mlen = 0; mlen <= 21; ++mlen) {
        double expected = 1.0;
        for (const std::uint64_t k : coeffs) {
            const double c =
                std::cos(2.0 * kPi * static_cast<double>(k * mlen) / 7.0);
            expected *= c * c;
        }
        CHECK(std::abs(qfa_acceptance(m, a_pow(mlen)) - expected) <= kExactTol);
    }
}

TEST_CASE("composite machines accept multiples of p with certainty") {
    const MeasureOnceQFA m = modp_composite(5, {1, 2, 4});
    for (std::uint64_t j = 0; j <= 10; ++j) {
        CHECK(1.0 - qfa_acceptance(m, a_pow(j * 5)) <= kExactTol);
    }
}

TEST_CASE("a single-coefficient composite is the plain mod-p machine for odd p") {
    const MeasureOnceQFA one = modp_composite(7, {1});
    const MeasureOnceQFA plain = modp_machine(7);
    for (std::uint64_t mlen = 0; mlen <= 35; ++mlen) {
        CHECK(std::abs(qfa_acceptance(one, a_pow(mlen)) -
                       qfa_acceptance(plain, a_pow(mlen))) <= 1e-12);
    }
}

TEST_CASE("composite coefficients are confined to [1, p-1] and the size cap") {
    CHECK_THROWS_AS(modp_composite(5, {0}), Error);
    CHECK_THROWS_AS(modp_composite(5, {5}), Error);
    CHECK_THROWS_AS(modp_composite(5, {}), Error);
    CHECK_THROWS_AS(modp_composite(5, std::vector<std::uint64_t>(13, 1)), Error);
    CHECK_NOTHROW(modp_composite(5, std::vector<std::uint64_t>(12, 1)));
}

TEST_CASE("the closed-form worst case matches a direct scan of the machine") {
    const std::vector<std::uint64_t> coeffs{1, 2};
    const MeasureOnceQFA m = modp_composite(11, coeffs);
    double scanned = 0.0;
    for (std::uint64_t mlen = 1; mlen < 11; ++mlen) {
        scanned = std::max(scanned, qfa_acceptance(m, a_pow(mlen)));
    }
    CHECK(std::abs(composite_worst_nonmember_acceptance(11, coeffs) - scanned) <= 1e-12);
}

TEST_CASE("the coefficient search finds a tuple below the target and verifies it") {
    const auto found = search_composite_coefficients(5, 3, 0.3, 42, 1000);
    REQUIRE(found.has_value());
    CHECK(found->size() == 3);
    CHECK(composite_worst_nonmember_acceptance(5, *found) < 0.3);
}

TEST_CASE("the coefficient search is deterministic in the seed") {
    const auto a = search_composite_coefficients(7, 2, 0.5, 99, 1000);
    const auto b = search_composite_coefficients(7, 2, 0.5, 99, 1000);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}

TEST_CASE("a unit error target accepts the first sampled tuple") {
    // Every tuple has worst-case acceptance strictly below 1, so the first
    // draw wins.
    const auto found = search_composite_coefficients(11, 2, 1.0, 5, 1);
    CHECK(found.has_value());
}

TEST_CASE("the search reports failure when attempts run out") {
    CHECK_FALSE(search_composite_coefficients(5, 1, 1e-6, 1, 50).has_value());
    CHECK_FALSE(search_composite_coefficients(5, 2, 0.3, 1, 0).has_value());
}

TEST_CASE("search parameters are validated") {
    CHECK_THROWS_AS(search_composite_coefficients(5, 0, 0.5, 1, 10), Error);
    CHECK_THROWS_AS(search_composite_coefficients(5, 13, 0.5, 1, 10), Error);
    CHECK_THROWS_AS(search_composite_coefficients(5, 2, 0.0, 1, 10), Error);
    CHECK_THROWS_AS(search_composite_coefficients(5, 2, 1.5, 1, 10), Error);
}

TEST_CASE("the unequal-counts machine treats a and b symmetrically") {
    const MeasureOnceQFA m = neq_machine();
    CHECK(m.state_count() == 2);
    CHECK(m.accepting() == std::set<Eigen::Index>{1});
    CHECK(std::abs(qfa_acceptance(m, "a") - qfa_acceptance(m, "b")) <= 1e-12);
    CHECK(std::abs(qfa_acceptance(m, "aab") - qfa_acceptance(m, "bba")) <= 1e-12);
}

TEST_CASE("the unequal-counts machine is zero exactly on balanced strings") {
    const MeasureOnceQFA m = neq_machine();
    CHECK(qfa_acceptance(m, "") <= kProbTol);
    CHECK(qfa_acceptance(m, "abab") <= kProbTol);
    CHECK(qfa_acceptance(m, "a") > kProbTol);
    CHECK(qfa_acceptance(m, "abb") > kProbTol);
}
