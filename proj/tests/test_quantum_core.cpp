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

#include "qfasim/quantum.hpp"
#include "qfasim/random.hpp"

using namespace qfasim;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("rotation operator at zero is the identity") {
    const UnitaryOperator u = rotation_operator(0.0);
    CHECK(max_abs_diff(u.entries(), CMatrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("rotation operator with cos = 3/5 has the expected entries") {
    const UnitaryOperator u = rotation_operator(std::acos(0.6));
    CHECK(std::abs(u.entries()(0, 0).real() - 0.6) <= 1e-15);
    CHECK(std::abs(u.entries()(0, 1).real() + 0.8) <= 1e-15);
    CHECK(std::abs(u.entries()(1, 0).real() - 0.8) <= 1e-15);
    CHECK(std::abs(u.entries()(1, 1).real() - 0.6) <= 1e-15);
}

TEST_CASE("rotation operator at pi/2 is the quarter turn") {
    const UnitaryOperator u = rotation_operator(kPi / 2.0);
    CHECK(std::abs(u.entries()(0, 0).real()) <= 1e-15);
    CHECK(std::abs(u.entries()(0, 1).real() + 1.0) <= 1e-15);
    CHECK(std::abs(u.entries()(1, 0).real() - 1.0) <= 1e-15);
    CHECK(std::abs(u.entries()(1, 1).real()) <= 1e-15);
}

TEST_CASE("rotation operator rejects non-finite angles") {
    CHECK_THROWS_AS(rotation_operator(std::nan("")), Error);
    CHECK_THROWS_AS(rotation_operator(INFINITY), Error);
}

TEST_CASE("rotation operators compose additively") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-8.0, 8.0);
    for (int i = 0; i < 100; ++i) {
        const double t1 = angle(rng);
        const double t2 = angle(rng);
        const CMatrix product =
            rotation_operator(t1).entries() * rotation_operator(t2).entries();
        CHECK(max_abs_diff(product, rotation_operator(t1 + t2).entries()) <= kNormTol);
    }
}

TEST_CASE("applying the identity returns the same state") {
    const PureState s = PureState::basis(3, 1);
    const PureState out = apply_unitary(UnitaryOperator(CMatrix::Identity(3, 3)), s);
    CHECK((out.amplitudes() - s.amplitudes()).norm() == 0.0);
}

TEST_CASE("two eighth turns move the first basis state to the second") {
    const UnitaryOperator u = rotation_operator(kPi / 4.0);
    const PureState mid = apply_unitary(u, PureState::basis(2, 0));
    const PureState end = apply_unitary(u, mid);
    CHECK(std::abs(end.amplitude(0)) <= kNormTol);
    CHECK(std::abs(std::abs(end.amplitude(1)) - 1.0) <= kNormTol);
}

TEST_CASE("the 3/5 rotation maps the start state to (3/5, 4/5)") {
    const PureState out =
        apply_unitary(rotation_operator(std::acos(0.6)), PureState::basis(2, 0));
    CHECK(std::abs(out.amplitude(0).real() - 0.6) <= 1e-15);
    CHECK(std::abs(out.amplitude(1).real() - 0.8) <= 1e-15);
}

TEST_CASE("apply_unitary rejects mismatched dimensions") {
    CHECK_THROWS_AS(
        apply_unitary(UnitaryOperator(CMatrix::Identity(3, 3)), PureState::basis(2, 0)),
        Error);
}

TEST_CASE("unitaries preserve the norm of random states") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 6);
        const PureState out = apply_unitary(random_unitary(n, rng), random_pure_state(n, rng));
        CHECK(std::abs(out.amplitudes().norm() - 1.0) <= kNormTol);
    }
}

TEST_CASE("measuring a basis state is deterministic") {
    const MeasurementPartition p(2, {{0}, {1}});
    const auto outcomes = measure(PureState::basis(2, 0), p);
    REQUIRE(outcomes.size() == 2);
    CHECK(outcomes[0].probability == 1.0);
    CHECK(outcomes[1].probability == 0.0);
    REQUIRE(outcomes[0].collapsed.has_value());
    CHECK_FALSE(outcomes[1].collapsed.has_value());
}

TEST_CASE("measuring the uniform two-state superposition gives 1/2 each") {
    CVector amp(2);
    amp << Complex(std::numbers::sqrt2 / 2.0, 0.0), Complex(std::numbers::sqrt2 / 2.0, 0.0);
    const auto outcomes = measure(PureState(std::move(amp)), MeasurementPartition(2, {{0}, {1}}));
    CHECK(std::abs(outcomes[0].probability - 0.5) <= 1e-15);
    CHECK(std::abs(outcomes[1].probability - 0.5) <= 1e-15);
}

TEST_CASE("measuring (3/5, 4/5) gives 9/25 and 16/25") {
    CVector amp(2);
    amp << Complex(0.6, 0.0), Complex(0.8, 0.0);
    const auto outcomes = measure(PureState(std::move(amp)), MeasurementPartition(2, {{0}, {1}}));
    CHECK(std::abs(outcomes[0].probability - 0.36) <= 1e-15);
    CHECK(std::abs(outcomes[1].probability - 0.64) <= 1e-15);
    // Collapse renormalizes each block.
    CHECK(std::abs(std::abs(outcomes[0].collapsed->amplitude(0)) - 1.0) <= kNormTol);
}

TEST_CASE("measurement outcomes form a distribution and collapse to unit norm") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 40; ++i) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 6);
        const PureState s = random_pure_state(n, rng);
        std::vector<std::vector<Eigen::Index>> blocks(1 + rng() % 3);
        for (Eigen::Index j = 0; j < n; ++j) {
            blocks[rng() % blocks.size()].push_back(j);
        }
        std::erase_if(blocks, [](const auto& b) { return b.empty(); });
        double total = 0.0;
        for (const auto& o : measure(s, MeasurementPartition(n, blocks))) {
            CHECK(o.probability >= 0.0);
            total += o.probability;
            if (o.collapsed) {
                CHECK(std::abs(o.collapsed->amplitudes().norm() - 1.0) <= kNormTol);
            }
        }
        CHECK(std::abs(total - 1.0) <= kNormTol);
    }
}

TEST_CASE("measure rejects a partition of the wrong dimension") {
    CHECK_THROWS_AS(measure(PureState::basis(3, 0), MeasurementPartition(2, {{0}, {1}})), Error);
}

TEST_CASE("partition validation requires disjoint nonempty covering blocks") {
    CHECK_THROWS_AS(MeasurementPartition(2, {{0}}), Error);
    CHECK_THROWS_AS(MeasurementPartition(2, {{0, 1}, {1}}), Error);
    CHECK_THROWS_AS(MeasurementPartition(2, {{0, 1}, {}}), Error);
    CHECK_NOTHROW(MeasurementPartition(2, {{1, 0}}));
}

TEST_CASE("density of a basis state has a single unit entry") {
    const DensityMatrix rho = density_from_pure(PureState::basis(2, 0));
    CHECK(rho.entries()(0, 0) == Complex(1.0, 0.0));
    CHECK(rho.entries()(0, 1) == Complex(0.0, 0.0));
    CHECK(rho.entries()(1, 1) == Complex(0.0, 0.0));
}

TEST_CASE("density of the uniform superposition has all entries 1/2") {
    CVector amp(2);
    amp << Complex(std::numbers::sqrt2 / 2.0, 0.0), Complex(std::numbers::sqrt2 / 2.0, 0.0);
    const DensityMatrix rho = density_from_pure(PureState(std::move(amp)));
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            CHECK(std::abs(rho.entries()(i, j).real() - 0.5) <= 1e-15);
        }
    }
}

TEST_CASE("density of (3/5, 4/5) is the expected outer product") {
    CVector amp(2);
    amp << Complex(0.6, 0.0), Complex(0.8, 0.0);
    const DensityMatrix rho = density_from_pure(PureState(std::move(amp)));
    CHECK(std::abs(rho.entries()(0, 0).real() - 0.36) <= 1e-15);
    CHECK(std::abs(rho.entries()(0, 1).real() - 0.48) <= 1e-15);
    CHECK(std::abs(rho.entries()(1, 0).real() - 0.48) <= 1e-15);
    CHECK(std::abs(rho.entries()(1, 1).real() - 0.64) <= 1e-15);
}

TEST_CASE("a single identity element is a valid superoperator") {
    CHECK_NOTHROW(Superoperator({CMatrix::Identity(2, 2)}));
}

TEST_CASE("the two basis projectors form a valid superoperator") {
    CMatrix p0 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    CMatrix p1 = CMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    CHECK_NOTHROW(Superoperator({p0, p1}));
}

TEST_CASE("a scaled identity fails completeness with the deviation reported") {
    try {
        Superoperator({CMatrix::Identity(2, 2) * 0.5});
        FAIL("expected completeness failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_superoperator);
        CHECK(std::string(e.what()).find("0.75") != std::string::npos);
    }
}

TEST_CASE("superoperator elements must share one square dimension") {
    CHECK_THROWS_AS(Superoperator({CMatrix::Identity(2, 2), CMatrix::Zero(3, 3)}), Error);
    CHECK_THROWS_AS(Superoperator(std::vector<CMatrix>{}), Error);
}

TEST_CASE("wrapping a unitary gives a one-element channel with matching action") {
    const Superoperator id = superoperator_from_unitary(UnitaryOperator(CMatrix::Identity(2, 2)));
    CHECK(id.element_count() == 1);

    const Superoperator quarter = superoperator_from_unitary(rotation_operator(kPi / 2.0));
    const DensityMatrix out =
        apply_superoperator(quarter, density_from_pure(PureState::basis(2, 0)));
    CHECK(std::abs(out.entries()(1, 1).real() - 1.0) <= kNormTol);
    CHECK(std::abs(out.entries()(0, 0).real()) <= kNormTol);

    const Superoperator tilt = superoperator_from_unitary(rotation_operator(std::acos(0.6)));
    const DensityMatrix tilted =
        apply_superoperator(tilt, density_from_pure(PureState::basis(2, 0)));
    CHECK(std::abs(tilted.entries()(0, 0).real() - 0.36) <= 1e-15);
}

TEST_CASE("channel application agrees with pure-state evolution") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 40; ++i) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 5);
        const UnitaryOperator u = random_unitary(n, rng);
        const PureState s = random_pure_state(n, rng);
        const DensityMatrix via_channel =
            apply_superoperator(superoperator_from_unitary(u), density_from_pure(s));
        const DensityMatrix direct = density_from_pure(apply_unitary(u, s));
        CHECK(max_abs_diff(via_channel.entries(), direct.entries()) <= kNormTol);
    }
}

TEST_CASE("the identity channel leaves a density matrix unchanged") {
    std::mt19937_64 rng(15);
    const DensityMatrix rho = random_density(4, rng);
    const DensityMatrix out =
        apply_superoperator(Superoperator({CMatrix::Identity(4, 4)}), rho);
    CHECK(max_abs_diff(out.entries(), rho.entries()) == 0.0);
}

TEST_CASE("the projector channel dephases the uniform superposition") {
    CMatrix p0 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    CMatrix p1 = CMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    CVector amp(2);
    amp << Complex(std::numbers::sqrt2 / 2.0, 0.0), Complex(std::numbers::sqrt2 / 2.0, 0.0);
    const DensityMatrix out =
        apply_superoperator(Superoperator({p0, p1}), density_from_pure(PureState(std::move(amp))));
    CHECK(std::abs(out.entries()(0, 0).real() - 0.5) <= 1e-15);
    CHECK(std::abs(out.entries()(1, 1).real() - 0.5) <= 1e-15);
    CHECK(std::abs(out.entries()(0, 1)) <= 1e-15);
    CHECK(std::abs(out.entries()(1, 0)) <= 1e-15);
}

TEST_CASE("channels preserve trace, Hermiticity, and positivity") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 60; ++i) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 4);
        const Superoperator e = random_superoperator(n, 1 + rng() % 4, rng);
        const DensityMatrix rho = random_density(n, rng);
        // The DensityMatrix constructor revalidates all three invariants.
        const DensityMatrix out = apply_superoperator(e, rho);
        CHECK(std::abs(out.entries().trace().real() - 1.0) <= kNormTol);
    }
}

TEST_CASE("apply_superoperator rejects mismatched dimensions") {
    std::mt19937_64 rng(17);
    CHECK_THROWS_AS(
        apply_superoperator(Superoperator({CMatrix::Identity(3, 3)}), random_density(2, rng)),
        Error);
}

TEST_CASE("tensoring identity channels gives the identity channel") {
    const Superoperator a({CMatrix::Identity(2, 2)});
    const Superoperator product = tensor_superoperators(a, a);
    REQUIRE(product.element_count() == 1);
    CHECK(max_abs_diff(product.elements()[0], CMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("tensoring two rotations gives their Kronecker product") {
    const UnitaryOperator u = rotation_operator(0.3);
    const UnitaryOperator v = rotation_operator(1.1);
    const Superoperator product = tensor_superoperators(superoperator_from_unitary(u),
                                                        superoperator_from_unitary(v));
    REQUIRE(product.element_count() == 1);
    CHECK(max_abs_diff(product.elements()[0], kron(u.entries(), v.entries())) == 0.0);
}

TEST_CASE("tensor element counts multiply") {
    std::mt19937_64 rng(18);
    const Superoperator a = random_superoperator(2, 2, rng);
    const Superoperator b = random_superoperator(2, 3, rng);
    CHECK(tensor_superoperators(a, b).element_count() == 6);
}

TEST_CASE("kron follows the row-major block convention") {
    CMatrix a(2, 2);
    a << Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0);
    const CMatrix k = kron(a, CMatrix::Identity(2, 2));
    CHECK(k(0, 0) == Complex(1, 0));
    CHECK(k(1, 1) == Complex(1, 0));
    CHECK(k(0, 2) == Complex(2, 0));
    CHECK(k(2, 0) == Complex(3, 0));
    CHECK(k(2, 2) == Complex(4, 0));
    CHECK(k(0, 1) == Complex(0, 0));
}

TEST_CASE("ensemble decomposition reconstructs the density matrix") {
    std::mt19937_64 rng(19);
    const DensityMatrix rho = random_density(4, rng);
    CMatrix rebuilt = CMatrix::Zero(4, 4);
    for (const auto& [weight, state] : ensemble_decomposition(rho)) {
        CHECK(weight > 0.0);
        rebuilt += weight * (state.amplitudes() * state.amplitudes().adjoint());
    }
    CHECK(max_abs_diff(rebuilt, rho.entries()) <= 1e-8);
}

TEST_CASE("pure state validation rejects unnormalized vectors") {
    CVector amp(2);
    amp << Complex(0.6, 0.0), Complex(0.9, 0.0);
    CHECK_THROWS_AS(PureState(std::move(amp)), Error);
}

TEST_CASE("unitary validation rejects non-unitary matrices") {
    CMatrix m(2, 2);
    m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0.5, 0);
    CHECK_THROWS_AS(UnitaryOperator(std::move(m)), Error);
}

TEST_CASE("stochastic validation names the offending column") {
    RMatrix m(2, 2);
    m << 0.5, 0.9, 0.5, 0.2;
    try {
        StochasticMatrix bad(std::move(m));
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::validation);
        CHECK(std::string(e.what()).find("column 2") != std::string::npos);
    }
}

TEST_CASE("density validation rejects bad trace, asymmetry, and negativity") {
    CMatrix half = CMatrix::Identity(2, 2) * 0.25;
    CHECK_THROWS_AS(DensityMatrix(std::move(half)), Error);

    CMatrix skew(2, 2);
    skew << Complex(0.5, 0), Complex(0.3, 0), Complex(-0.3, 0), Complex(0.5, 0);
    CHECK_THROWS_AS(DensityMatrix(std::move(skew)), Error);

    CMatrix indefinite(2, 2);
    indefinite << Complex(1.5, 0), Complex(0, 0), Complex(0, 0), Complex(-0.5, 0);
    CHECK_THROWS_AS(DensityMatrix(std::move(indefinite)), Error);
}
