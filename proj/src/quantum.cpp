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

#include "qfasim/quantum.hpp"

#include <cmath>
#include <sstream>

namespace qfasim {

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

PureState::PureState(CVector amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.size() < 1) {
        fail(ErrorCode::validation, "pure state must have at least one amplitude");
    }
    const double sumsq = amp_.squaredNorm();
    if (std::abs(sumsq - 1.0) > kNormTol) {
        std::ostringstream os;
        os << "pure state norm^2 deviates from 1 by " << std::abs(sumsq - 1.0);
        fail(ErrorCode::validation, os.str());
    }
}

PureState PureState::basis(Eigen::Index dim, Eigen::Index j) {
    if (dim < 1 || j < 0 || j >= dim) {
        fail(ErrorCode::invalid_argument, "basis index out of range");
    }
    CVector v = CVector::Zero(dim);
    v(j) = Complex(1.0, 0.0);
    return PureState(std::move(v));
}

UnitaryOperator UnitaryOperator::tensor(const UnitaryOperator& a, const UnitaryOperator& b) {
    return UnitaryOperator(kron(a.entries(), b.entries()), Unchecked{});
}

UnitaryOperator::UnitaryOperator(CMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() < 1 || m_.rows() != m_.cols()) {
        fail(ErrorCode::validation, "unitary operator must be a nonempty square matrix");
    }
    const CMatrix gram = m_.adjoint() * m_;
    const double dev = max_abs(gram - CMatrix::Identity(m_.rows(), m_.cols()));
    if (dev > kNormTol) {
        std::ostringstream os;
        os << "operator is not unitary: max |U^dag U - I| = " << dev;
        fail(ErrorCode::validation, os.str());
    }
}

StochasticMatrix::StochasticMatrix(RMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() < 1 || m_.rows() != m_.cols()) {
        fail(ErrorCode::validation, "stochastic matrix must be a nonempty square matrix");
    }
    for (Eigen::Index j = 0; j < m_.cols(); ++j) {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < m_.rows(); ++i) {
            const double v = m_(i, j);
            if (v < -kNormTol || v > 1.0 + kNormTol) {
                std::ostringstream os;
                os << "stochastic matrix entry (" << i + 1 << "," << j + 1
                   << ") = " << v << " is outside [0,1]";
                fail(ErrorCode::validation, os.str());
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > kNormTol) {
            std::ostringstream os;
            os << "column " << j + 1 << " sums to " << sum << ", not 1";
            fail(ErrorCode::validation, os.str());
        }
    }
}

DensityMatrix::DensityMatrix(CMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() < 1 || m_.rows() != m_.cols()) {
        fail(ErrorCode::validation, "density matrix must be a nonempty square matrix");
    }
    const double trace_dev = std::abs(m_.trace() - Complex(1.0, 0.0));
    if (trace_dev > kNormTol) {
        std::ostringstream os;
        os << "density matrix trace deviates from 1 by " << trace_dev;
        fail(ErrorCode::validation, os.str());
    }
    const double herm_dev = max_abs(m_ - m_.adjoint());
    if (herm_dev > kNormTol) {
        std::ostringstream os;
        os << "density matrix is not Hermitian: max |rho - rho^dag| = " << herm_dev;
        fail(ErrorCode::validation, os.str());
    }
    // PSD check on the Hermitian part; roundoff may leave eigenvalues
    // slightly below zero.
    const CMatrix herm = (m_ + m_.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kNormTol) {
        std::ostringstream os;
        os << "density matrix has negative eigenvalue " << min_eig;
        fail(ErrorCode::validation, os.str());
    }
}

Superoperator::Superoperator(std::vector<CMatrix> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        fail(ErrorCode::invalid_argument, "superoperator needs at least one operation element");
    }
    const Eigen::Index n = elements_.front().rows();
    for (const CMatrix& e : elements_) {
        if (e.rows() != n || e.cols() != n) {
            fail(ErrorCode::invalid_argument,
                 "all operation elements must be square matrices of the same dimension");
        }
    }
    CMatrix sum = CMatrix::Zero(n, n);
    for (const CMatrix& e : elements_) {
        sum += e.adjoint() * e;
    }
    const double dev = max_abs(sum - CMatrix::Identity(n, n));
    if (dev > kNormTol) {
        std::ostringstream os;
        os << "completeness violated: max |sum E^dag E - I| = " << dev;
        fail(ErrorCode::invalid_superoperator, os.str());
    }
}

MeasurementPartition::MeasurementPartition(Eigen::Index dim,
                                           std::vector<std::vector<Eigen::Index>> blocks)
    : dim_(dim), blocks_(std::move(blocks)) {
    if (dim_ < 1) {
        fail(ErrorCode::invalid_argument, "partition dimension must be positive");
    }
    if (blocks_.empty()) {
        fail(ErrorCode::invalid_argument, "partition needs at least one block");
    }
    std::vector<bool> seen(static_cast<std::size_t>(dim_), false);
    for (const auto& block : blocks_) {
        if (block.empty()) {
            fail(ErrorCode::invalid_argument, "partition blocks must be nonempty");
        }
        for (Eigen::Index idx : block) {
            if (idx < 0 || idx >= dim_) {
                fail(ErrorCode::invalid_argument, "partition index out of range");
            }
            if (seen[static_cast<std::size_t>(idx)]) {
                fail(ErrorCode::invalid_argument, "partition blocks must be disjoint");
            }
            seen[static_cast<std::size_t>(idx)] = true;
        }
    }
    for (bool covered : seen) {
        if (!covered) {
            fail(ErrorCode::invalid_argument, "partition blocks must cover every index");
        }
    }
}

UnitaryOperator rotation_operator(double theta) {
    if (!std::isfinite(theta)) {
        fail(ErrorCode::invalid_argument, "rotation angle must be finite");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    CMatrix m(2, 2);
    m << Complex(c, 0.0), Complex(-s, 0.0), Complex(s, 0.0), Complex(c, 0.0);
    return UnitaryOperator(std::move(m));
}

PureState apply_unitary(const UnitaryOperator& u, const PureState& s) {
    if (u.dim() != s.dim()) {
        fail(ErrorCode::invalid_argument, "operator and state dimensions differ");
    }
    return PureState(u.entries() * s.amplitudes());
}

std::vector<MeasurementOutcome> measure(const PureState& s, const MeasurementPartition& p) {
    if (p.dim() != s.dim()) {
        fail(ErrorCode::invalid_argument, "partition and state dimensions differ");
    }
    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(p.block_count());
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        const auto& block = p.blocks()[b];
        double prob = 0.0;
        for (Eigen::Index idx : block) {
            prob += std::norm(s.amplitude(idx));
        }
        std::optional<PureState> collapsed;
        if (prob > kProbTol) {
            CVector v = CVector::Zero(s.dim());
            const double inv = 1.0 / std::sqrt(prob);
            for (Eigen::Index idx : block) {
                v(idx) = s.amplitude(idx) * inv;
            }
            collapsed = PureState(std::move(v));
        }
        outcomes.push_back({static_cast<Eigen::Index>(b), prob, std::move(collapsed)});
    }
    return outcomes;
}

DensityMatrix density_from_pure(const PureState& s) {
    return DensityMatrix(s.amplitudes() * s.amplitudes().adjoint());
}

Superoperator superoperator_from_unitary(const UnitaryOperator& u) {
    return Superoperator({u.entries()});
}

DensityMatrix apply_superoperator(const Superoperator& e, const DensityMatrix& rho) {
    if (e.dim() != rho.dim()) {
        fail(ErrorCode::invalid_argument, "superoperator and state dimensions differ");
    }
    CMatrix out = CMatrix::Zero(rho.dim(), rho.dim());
    for (const CMatrix& elem : e.elements()) {
        out += elem * rho.entries() * elem.adjoint();
    }
    return DensityMatrix(std::move(out));
}

Superoperator tensor_superoperators(const Superoperator& a, const Superoperator& b) {
    std::vector<CMatrix> elems;
    elems.reserve(a.element_count() * b.element_count());
    for (const CMatrix& ea : a.elements()) {
        for (const CMatrix& eb : b.elements()) {
            elems.push_back(kron(ea, eb));
        }
    }
    return Superoperator(std::move(elems));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::vector<std::pair<double, PureState>> ensemble_decomposition(const DensityMatrix& rho) {
    const CMatrix herm = (rho.entries() + rho.entries().adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
    std::vector<std::pair<double, PureState>> ensemble;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double p = solver.eigenvalues()(i);
        if (p > kProbTol) {
            CVector v = solver.eigenvectors().col(i);
            v /= v.norm();
            ensemble.emplace_back(p, PureState(std::move(v)));
        }
    }
    return ensemble;
}

} // namespace qfasim
