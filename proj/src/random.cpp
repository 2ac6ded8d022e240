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

#include "qfasim/random.hpp"

namespace qfasim {

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 mixer(seed ^ (0x632be59bd9b4e019ULL + stream * 0x9e3779b97f4a7c15ULL));
    return mixer.next();
}

namespace {

CMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CMatrix g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            g(i, j) = Complex(dist(rng), dist(rng));
        }
    }
    return g;
}

CMatrix haar_unitary(Eigen::Index n, std::mt19937_64& rng) {
    const CMatrix g = gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is Haar.
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        if (a > 0.0) {
            q.col(j) *= d / a;
        }
    }
    return q;
}

} // namespace

PureState random_pure_state(Eigen::Index n, std::mt19937_64& rng) {
    CMatrix g = gaussian_matrix(n, 1, rng);
    CVector v = g.col(0);
    v /= v.norm();
    return PureState(std::move(v));
}

UnitaryOperator random_unitary(Eigen::Index n, std::mt19937_64& rng) {
    return UnitaryOperator(haar_unitary(n, rng));
}

Superoperator random_superoperator(Eigen::Index n, std::size_t l, std::mt19937_64& rng) {
    const Eigen::Index big = n * static_cast<Eigen::Index>(l);
    const CMatrix u = haar_unitary(big, rng);
    std::vector<CMatrix> elems;
    elems.reserve(l);
    for (std::size_t j = 0; j < l; ++j) {
        elems.push_back(u.block(static_cast<Eigen::Index>(j) * n, 0, n, n));
    }
    return Superoperator(std::move(elems));
}

DensityMatrix random_density(Eigen::Index n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int terms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<double> weights(static_cast<std::size_t>(terms));
    double total = 0.0;
    for (double& w : weights) {
        w = unit(rng) + 1e-3;
        total += w;
    }
    CMatrix rho = CMatrix::Zero(n, n);
    for (double w : weights) {
        const PureState s = random_pure_state(n, rng);
        rho += (w / total) * (s.amplitudes() * s.amplitudes().adjoint());
    }
    return DensityMatrix(std::move(rho));
}

StochasticMatrix random_stochastic(Eigen::Index n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            m(i, j) = unit(rng) + 1e-6;
            sum += m(i, j);
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            m(i, j) /= sum;
        }
    }
    return StochasticMatrix(std::move(m));
}

std::string random_string(const std::vector<char>& alphabet, std::size_t length,
                          std::mt19937_64& rng) {
    std::string w;
    w.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        w.push_back(alphabet[rng() % alphabet.size()]);
    }
    return w;
}

} // namespace qfasim
