// Copyright 2026 The qlt Authors
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

#ifndef QLT_LINALG_H
#define QLT_LINALG_H

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace qlt {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

using Rng = std::mt19937_64;

/// Derives an independent, reproducible engine for a named sub-stream of a
/// run seed. Splitmix64 scrambling keeps nearby (seed, stream) pairs
/// uncorrelated.
Rng make_rng(uint64_t seed, uint64_t stream = 0);

CMat kron(const CMat &a, const CMat &b);

bool is_unitary(const CMat &u, double tol = 1e-10);

/// Frobenius distance ||a - b||_F.
double frob_dist(const CMat &a, const CMat &b);

/// Haar-distributed unitary via QR of a complex Ginibre matrix with the
/// R-diagonal phase correction.
CMat haar_random_unitary(int d, Rng &rng);

/// Rescales by a global phase so the first entry of column 0 with modulus
/// above tol is real positive.
CMat fix_global_phase(CMat u, double tol = 1e-9);

/// Number of worker threads honored by the few parallel loops in this
/// library; reads QLT_THREADS (>=1) once, defaults to hardware concurrency.
int max_threads();

}  // namespace qlt

#endif
