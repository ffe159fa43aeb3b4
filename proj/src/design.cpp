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

#include "qlt/design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

namespace qlt {

namespace {

std::vector<std::tuple<int, int, cplx>> dense_to_entries(const CMat &w, double tol = 1e-14) {
    std::vector<std::tuple<int, int, cplx>> entries;
    for (Eigen::Index r = 0; r < w.rows(); r++) {
        for (Eigen::Index c = 0; c < w.cols(); c++) {
            if (std::abs(w(r, c)) > tol) {
                entries.emplace_back(static_cast<int>(r), static_cast<int>(c), w(r, c));
            }
        }
    }
    return entries;
}

}  // namespace

int EnvBasis::n_kept() const {
    int kept = 0;
    for (bool keep : measurable) {
        kept += keep ? 1 : 0;
    }
    return kept;
}

int EnvBasis::col_of_pair(int k, uint32_t i, uint32_t j) {
    const int np = 1 << (2 * k);  // 4^k
    const int nm = np - 1;
    if (i == 0 && j == 0) {
        return 0;
    }
    if (i > 0 && j > 0) {
        return 1 + static_cast<int>(i - 1) * nm + static_cast<int>(j - 1);
    }
    if (i == 0) {
        return 1 + nm * nm + static_cast<int>(j - 1);
    }
    return 1 + nm * nm + nm + static_cast<int>(i - 1);
}

double EnvBasis::gram_error() const {
    const int nb = n_cols();
    double worst = 0;
    for (int a = 0; a < nb; a++) {
        for (int b = a; b < nb; b++) {
            // entries sorted by linear key; merge-style sparse dot <B_a, B_b>
            cplx dot = 0;
            const auto &ea = elements[a].entries;
            const auto &eb = elements[b].entries;
            size_t pa = 0, pb = 0;
            const int d2 = 1 << (2 * k);
            auto key = [&](const std::tuple<int, int, cplx> &t) {
                return static_cast<long>(std::get<0>(t)) * d2 + std::get<1>(t);
            };
            while (pa < ea.size() && pb < eb.size()) {
                long ka = key(ea[pa]), kb = key(eb[pb]);
                if (ka < kb) {
                    pa++;
                } else if (kb < ka) {
                    pb++;
                } else {
                    dot += std::conj(std::get<2>(ea[pa])) * std::get<2>(eb[pb]);
                    pa++;
                    pb++;
                }
            }
            double expect = (a == b) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot - expect));
        }
    }
    return worst;
}

RVec EnvBasis::coords_of(const EnvironmentTensor &env) const {
    if (env.k != k) {
        throw std::invalid_argument("EnvBasis::coords_of: dimension mismatch");
    }
    RVec v(n_cols());
    for (int j = 0; j < n_cols(); j++) {
        cplx acc = 0;
        for (const auto &[r, c, val] : elements[j].entries) {
            acc += std::conj(val) * env.w(r, c);
        }
        if (std::abs(acc.imag()) > 1e-8 * std::max(1.0, env.norm())) {
            throw std::logic_error("EnvBasis::coords_of: coordinate not real");
        }
        v[j] = acc.real();
    }
    return v;
}

EnvironmentTensor EnvBasis::tensor_from_coords(const RVec &v) const {
    EnvironmentTensor env = EnvironmentTensor::zero(k);
    for (int j = 0; j < n_cols(); j++) {
        if (v[j] == 0.0) {
            continue;
        }
        for (const auto &[r, c, val] : elements[j].entries) {
            env.w(r, c) += v[j] * val;
        }
    }
    return env;
}

double EnvBasis::project_gate(int col, const CVec &uvec) const {
    cplx acc = 0;
    for (const auto &[r, c, val] : elements[col].entries) {
        acc += val * uvec[r] * std::conj(uvec[c]);
    }
    if (std::abs(acc.imag()) > 1e-9 * std::max(1.0, std::abs(acc.real()))) {
        throw std::logic_error("EnvBasis::project_gate: projection not real");
    }
    return acc.real();
}

CVec gate_vec(const CMat &u) {
    const int d = static_cast<int>(u.rows());
    CVec uvec(d * d);
    for (int i = 0; i < d; i++) {
        for (int o = 0; o < d; o++) {
            uvec[i * d + o] = u(o, i);
        }
    }
    return uvec;
}

EnvBasis horizontal_basis(int k) {
    EnvBasis basis;
    basis.k = k;
    basis.is_horizontal = true;
    const int np = 1 << (2 * k);
    const int n_cols = np * np;
    const double d = static_cast<double>(1 << k);
    basis.elements.resize(n_cols);
    basis.measurable.assign(n_cols, false);
    basis.pair_of_col.resize(n_cols);
    for (uint32_t i = 0; i < static_cast<uint32_t>(np); i++) {
        for (uint32_t j = 0; j < static_cast<uint32_t>(np); j++) {
            int col = col_of_pair(k, i, j);
            basis.elements[col].entries = dense_to_entries(horizontal_pattern(k, i, j) / d);
            basis.pair_of_col[col] = {static_cast<int>(i), static_cast<int>(j)};
            basis.measurable[col] = (i == 0 && j == 0) || (i > 0 && j > 0);
        }
    }
    return basis;
}

EnvBasis rotated_basis(const EnvBasis &basis, uint64_t seed) {
    // Random orthogonal mix of the measurable non-constant columns via QR of
    // a Gaussian matrix.
    std::vector<int> cols;
    for (int j = 1; j < basis.n_cols(); j++) {
        if (basis.measurable[j]) {
            cols.push_back(j);
        }
    }
    const int nm = static_cast<int>(cols.size());
    Rng rng = make_rng(seed, 0x8a5e);
    std::normal_distribution<double> gauss(0, 1);
    RMat g(nm, nm);
    for (int a = 0; a < nm; a++) {
        for (int b = 0; b < nm; b++) {
            g(a, b) = gauss(rng);
        }
    }
    Eigen::HouseholderQR<RMat> qr(g);
    RMat q = qr.householderQ();

    EnvBasis out = basis;
    out.is_horizontal = false;
    out.pair_of_col.clear();
    const int d2 = 1 << (2 * basis.k);
    for (int jj = 0; jj < nm; jj++) {
        CMat w = CMat::Zero(d2, d2);
        for (int ll = 0; ll < nm; ll++) {
            if (std::abs(q(ll, jj)) < 1e-15) {
                continue;
            }
            for (const auto &[r, c, val] : basis.elements[cols[ll]].entries) {
                w(r, c) += q(ll, jj) * val;
            }
        }
        out.elements[cols[jj]].entries = dense_to_entries(w);
    }
    return out;
}

GateSet gate_set_from_tableaux(const std::vector<CliffordTableau> &tabs, GateSet::Mode mode) {
    if (tabs.empty()) {
        throw std::invalid_argument("gate_set_from_tableaux: empty");
    }
    GateSet gs;
    gs.k = tabs[0].k;
    gs.mode = mode;
    gs.gates.reserve(tabs.size());
    gs.tableaux.reserve(tabs.size());
    for (const auto &t : tabs) {
        gs.gates.push_back(tableau_to_unitary(t));
        gs.tableaux.push_back(t);
    }
    return gs;
}

const GateSet &clifford_group_gate_set(int k) {
    static const GateSet cached1 = gate_set_from_tableaux(enumerate_clifford_group(1));
    static const GateSet cached2 = gate_set_from_tableaux(enumerate_clifford_group(2));
    if (k == 1) {
        return cached1;
    }
    if (k == 2) {
        return cached2;
    }
    throw std::invalid_argument("clifford_group_gate_set: only k in {1, 2}");
}

DesignMatrix build_design_matrix(const GateSet &gs, const EnvBasis &basis) {
    if (gs.k != basis.k) {
        throw std::invalid_argument("build_design_matrix: dimension mismatch");
    }
    if (basis.gram_error() > 1e-10) {
        throw std::invalid_argument("build_design_matrix: basis not orthonormal");
    }
    DesignMatrix dm;
    dm.basis = std::make_shared<EnvBasis>(basis);
    const int n_cols = basis.n_cols();
    const int np = 1 << (2 * gs.k);
    dm.m = RMat::Zero(static_cast<Eigen::Index>(gs.size()), n_cols);
    for (size_t g = 0; g < gs.size(); g++) {
        if (basis.is_horizontal && gs.tableaux[g].has_value()) {
            // Clifford fast path: the row is the +-1 pairing pattern.
            const CliffordTableau &t = *gs.tableaux[g];
            for (uint32_t j = 0; j < static_cast<uint32_t>(np); j++) {
                PauliString img = tableau_conjugate(t, PauliString::from_index(gs.k, j));
                double sign = (img.phase_exp == 0) ? 1.0 : -1.0;
                dm.m(static_cast<Eigen::Index>(g), EnvBasis::col_of_pair(gs.k, img.index(), j)) = sign;
            }
        } else {
            CVec uvec = gate_vec(gs.gates[g]);
            for (int col = 0; col < n_cols; col++) {
                dm.m(static_cast<Eigen::Index>(g), col) = basis.project_gate(col, uvec);
            }
        }
    }
    return dm;
}

DesignDiagnostics design_diagnostics(const DesignMatrix &dm) {
    const auto &basis = *dm.basis;
    const long n_rows = dm.m.rows();
    if (n_rows == 0) {
        throw std::invalid_argument("design_diagnostics: empty design matrix");
    }
    DesignDiagnostics diag;
    diag.second_moment = dm.m.transpose() * dm.m;

    // Restrict to the measurable+constant block before inverting.
    std::vector<int> kept;
    for (int j = 0; j < basis.n_cols(); j++) {
        if (basis.measurable[j]) {
            kept.push_back(j);
        }
    }
    const int nk = static_cast<int>(kept.size());
    RMat block(nk, nk);
    for (int a = 0; a < nk; a++) {
        for (int b = 0; b < nk; b++) {
            block(a, b) = diag.second_moment(kept[a], kept[b]);
        }
    }
    Eigen::SelfAdjointEigenSolver<RMat> solver(block, Eigen::EigenvaluesOnly);
    const RVec &eigs = solver.eigenvalues();
    double max_eig = std::max(0.0, eigs[nk - 1]);
    double cutoff = 1e-10 * max_eig;
    diag.trace_inv_pseudo = 0;
    diag.rank = 0;
    diag.frame_lower = 0;
    diag.frame_upper = max_eig;
    // eigenvalues are ascending, so the first one above the cutoff is the
    // smallest nonzero
    for (int i = 0; i < nk; i++) {
        if (eigs[i] > cutoff) {
            diag.trace_inv_pseudo += static_cast<double>(n_rows) / eigs[i];
            if (diag.rank == 0) {
                diag.frame_lower = eigs[i];
            }
            diag.rank++;
        }
    }
    diag.covers_measurable = (diag.rank == nk);
    return diag;
}

double frame_potential(const GateSet &gs) {
    const size_t n = gs.size();
    if (n == 0) {
        throw std::invalid_argument("frame_potential: empty gate set");
    }
    const int threads = std::min<int>(max_threads(), 8);
    std::vector<long double> partial(threads, 0.0L);
    auto worker = [&](int tid) {
        long double acc = 0;
        for (size_t i = tid; i < n; i += threads) {
            // diagonal element |tr I|^4 = d^4
            double dd = static_cast<double>(gs.gates[i].rows());
            acc += dd * dd * dd * dd;
            for (size_t j = i + 1; j < n; j++) {
                cplx tr = gs.gates[i].cwiseProduct(gs.gates[j].conjugate()).sum();
                double t2 = std::norm(tr);
                acc += 2.0 * t2 * t2;
            }
        }
        partial[tid] = acc;
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; t++) {
        pool.emplace_back(worker, t);
    }
    worker(0);
    for (auto &th : pool) {
        th.join();
    }
    long double total = 0;
    for (long double p : partial) {
        total += p;
    }
    return static_cast<double>(total / (static_cast<long double>(n) * static_cast<long double>(n)));
}

}  // namespace qlt
