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

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qfasim/errors.hpp"

// Dense complex linear algebra for quantum states: pure states, unitaries,
// projective measurement, density matrices, and superoperator algebra.
// All values are immutable after construction and every operation is a pure
// function, so everything here is safe to share across threads.

namespace qfasim {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

/// Tolerance for all validity checks (norms, unitarity, stochasticity,
/// trace, Hermiticity, completeness).
inline constexpr double kNormTol = 1e-9;

/// Threshold below which a probability is treated as exactly zero.
inline constexpr double kProbTol = 1e-12;

/// Unit-norm complex amplitude vector over the machine's basis states.
/// States are indexed 0..dim()-1; index j corresponds to the basis state
/// written |q_{j+1}> in one-based notation.
class PureState {
  public:
    /// Validates sum_j |amp_j|^2 = 1 within kNormTol.
    explicit PureState(CVector amplitudes);

    /// The basis state with amplitude 1 at index `j`.
    static PureState basis(Eigen::Index dim, Eigen::Index j);

    Eigen::Index dim() const { return amp_.size(); }
    const CVector& amplitudes() const { return amp_; }
    Complex amplitude(Eigen::Index j) const { return amp_(j); }

  private:
    CVector amp_;
};

/// Square complex matrix U with U^dagger U = I within kNormTol.
class UnitaryOperator {
  public:
    explicit UnitaryOperator(CMatrix entries);

    /// Tensor product of two validated unitaries. Skips the quadratic-form
    /// check: (A (x) B)^dag (A (x) B) = (A^dag A) (x) (B^dag B), so the
    /// product inherits unitarity from its factors.
    static UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b);

    Eigen::Index dim() const { return m_.rows(); }
    const CMatrix& entries() const { return m_; }

  private:
    struct Unchecked {};
    UnitaryOperator(CMatrix entries, Unchecked) : m_(std::move(entries)) {}

    CMatrix m_;
};

/// Square real matrix with entries in [0,1] whose columns each sum to 1.
/// Entry (i,j) is the probability of moving from state j to state i.
class StochasticMatrix {
  public:
    explicit StochasticMatrix(RMatrix entries);

    Eigen::Index dim() const { return m_.rows(); }
    const RMatrix& entries() const { return m_; }

  private:
    RMatrix m_;
};

/// Trace-1 Hermitian positive-semidefinite matrix representing a mixed
/// state. Eigenvalues down to -kNormTol are tolerated (roundoff produces
/// tiny negative eigenvalues).
class DensityMatrix {
  public:
    explicit DensityMatrix(CMatrix entries);

    Eigen::Index dim() const { return m_.rows(); }
    const CMatrix& entries() const { return m_; }

    /// Probability of observing basis state j (real part of the j-th
    /// diagonal entry).
    double diagonal_probability(Eigen::Index j) const { return m_(j, j).real(); }

  private:
    CMatrix m_;
};

/// Ordered list of operation elements E_1..E_l satisfying the completeness
/// equation sum_j E_j^dagger E_j = I within kNormTol.
class Superoperator {
  public:
    /// Validates completeness; throws ErrorCode::invalid_superoperator with
    /// the deviation norm in the message if it fails.
    explicit Superoperator(std::vector<CMatrix> elements);

    Eigen::Index dim() const { return elements_.front().rows(); }
    std::size_t element_count() const { return elements_.size(); }
    const std::vector<CMatrix>& elements() const { return elements_; }

  private:
    std::vector<CMatrix> elements_;
};

/// Partition of the basis indices {0..dim-1} into disjoint nonempty blocks.
/// Block b spans the subspace measured as outcome b.
class MeasurementPartition {
  public:
    MeasurementPartition(Eigen::Index dim, std::vector<std::vector<Eigen::Index>> blocks);

    Eigen::Index dim() const { return dim_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::vector<Eigen::Index>>& blocks() const { return blocks_; }

  private:
    Eigen::Index dim_;
    std::vector<std::vector<Eigen::Index>> blocks_;
};

/// One projective-measurement outcome: its index, its probability, and the
/// normalized post-measurement state (absent when the probability is below
/// kProbTol).
struct MeasurementOutcome {
    Eigen::Index outcome;
    double probability;
    std::optional<PureState> collapsed;
};

/// Counterclockwise rotation by `theta` radians:
///   [[cos t, -sin t], [sin t, cos t]].
UnitaryOperator rotation_operator(double theta);

/// |psi'> = U |psi>. Dimensions must match.
PureState apply_unitary(const UnitaryOperator& u, const PureState& s);

/// Projective measurement of `s` against partition `p`. Outcome b occurs
/// with probability sum_{j in block b} |amp_j|^2; the probabilities sum to
/// 1 within kNormTol.
std::vector<MeasurementOutcome> measure(const PureState& s, const MeasurementPartition& p);

/// The rank-1 density matrix |psi><psi|.
DensityMatrix density_from_pure(const PureState& s);

/// Wraps unitary evolution as a single-element superoperator {U}.
Superoperator superoperator_from_unitary(const UnitaryOperator& u);

/// rho' = sum_j E_j rho E_j^dagger. Trace is preserved within kNormTol.
DensityMatrix apply_superoperator(const Superoperator& e, const DensityMatrix& rho);

/// All pairwise tensor products a_i (x) b_j, in row-major element order.
/// Element counts multiply.
Superoperator tensor_superoperators(const Superoperator& a, const Superoperator& b);

/// Kronecker product, row-major block convention.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Read-only ensemble view of a density matrix: eigenpairs (p_j, |psi_j>)
/// with p_j > kProbTol. Ensembles are non-unique; this one is the spectral
/// decomposition.
std::vector<std::pair<double, PureState>> ensemble_decomposition(const DensityMatrix& rho);

} // namespace qfasim
