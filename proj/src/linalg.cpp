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

#include "qlt/linalg.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace qlt {

namespace {
uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15uLL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9uLL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebuLL;
    return x ^ (x >> 31);
}
}  // namespace

Rng make_rng(uint64_t seed, uint64_t stream) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(~stream)));
}

CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

bool is_unitary(const CMat &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    CMat gram = u.adjoint() * u;
    gram -= CMat::Identity(u.rows(), u.cols());
    return gram.norm() <= tol;
}

double frob_dist(const CMat &a, const CMat &b) {
    return (a - b).norm();
}

CMat haar_random_unitary(int d, Rng &rng) {
    if (d < 2) {
        throw std::invalid_argument("haar_random_unitary: dimension must be >= 2");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat g(d, d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            g(i, j) = cplx(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; i++) {
        cplx rii = r(i, i);
        double mag = std::abs(rii);
        q.col(i) *= (mag > 0) ? rii / mag : cplx(1, 0);
    }
    return q;
}

CMat fix_global_phase(CMat u, double tol) {
    for (Eigen::Index r = 0; r < u.rows(); r++) {
        cplx v = u(r, 0);
        if (std::abs(v) > tol) {
            u *= std::conj(v) / std::abs(v);
            return u;
        }
    }
    return u;
}

int max_threads() {
    static const int cached = [] {
        int n = static_cast<int>(std::thread::hardware_concurrency());
        if (n < 1) {
            n = 1;
        }
        if (const char *env = std::getenv("QLT_THREADS")) {
            int cap = std::atoi(env);
            if (cap >= 1 && cap < n) {
                n = cap;
            }
        }
        return n;
    }();
    return cached;
}

}  // namespace qlt
