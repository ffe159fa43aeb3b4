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

#include "qlt/environment.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace qlt {

EnvironmentTensor EnvironmentTensor::zero(int k) {
    EnvironmentTensor env;
    env.k = k;
    const int d2 = 1 << (2 * k);
    env.w = CMat::Zero(d2, d2);
    return env;
}

cplx &EnvironmentTensor::at(int i1, int o1, int i2, int o2) {
    const int d = dim();
    return w(i1 * d + o1, i2 * d + o2);
}

cplx EnvironmentTensor::at(int i1, int o1, int i2, int o2) const {
    const int d = dim();
    return w(i1 * d + o1, i2 * d + o2);
}

double EnvironmentTensor::hermiticity_error() const {
    return (w - w.adjoint().eval()).norm();
}

std::string EnvironmentTensor::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["index_convention"] = "w(i1*d+o1, i2*d+o2); f(U) = sum w * U(o1,i1) * conj(U(o2,i2))";
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < w.rows(); r++) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < w.cols(); c++) {
            row.push_back({w(r, c).real(), w(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j.dump();
}

EnvironmentTensor EnvironmentTensor::from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    EnvironmentTensor env = EnvironmentTensor::zero(j.at("k").get<int>());
    const auto &rows = j.at("matrix");
    for (Eigen::Index r = 0; r < env.w.rows(); r++) {
        for (Eigen::Index c = 0; c < env.w.cols(); c++) {
            const auto &cell = rows.at(r).at(c);
            env.w(r, c) = cplx(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
    }
    return env;
}

cplx contract(const EnvironmentTensor &env, const CMat &u, const CMat &v) {
    const int d = env.dim();
    if (u.rows() != d || v.rows() != d) {
        throw std::invalid_argument("contract: dimension mismatch");
    }
    // f = uvec^T w vvec with uvec[(i,o)] = U(o,i), vvec[(i,o)] = V(i,o).
    CVec uvec(d * d), vvec(d * d);
    for (int i = 0; i < d; i++) {
        for (int o = 0; o < d; o++) {
            uvec[i * d + o] = u(o, i);
            vvec[i * d + o] = v(i, o);
        }
    }
    return uvec.transpose() * env.w * vvec;
}

double contract_sym(const EnvironmentTensor &env, const CMat &u) {
    cplx value = contract(env, u, u.adjoint());
    if (std::abs(value.imag()) > 1e-9 * std::max(1.0, std::abs(value.real()))) {
        throw std::logic_error("contract_sym: imaginary residue too large");
    }
    return value.real();
}

EnvironmentTensor exact_environment(const Circuit &c, const Hamiltonian &h, size_t gate_index) {
    if (gate_index >= c.gates.size()) {
        throw std::invalid_argument("exact_environment: invalid gate index");
    }
    const int m = static_cast<int>(c.gates[gate_index].support.size());
    if (m > 2) {
        throw std::invalid_argument("exact_environment: gate has more than 2 qubits");
    }
    const int d = 1 << m;
    EnvironmentTensor env = EnvironmentTensor::zero(m);

    // s(A) = cost with A in the ket slot (the bra slot is forced to A^dag by
    // the simulator). Matrix units give the diagonal directly; pair probes
    // with 1 and i split the two cross terms, which is valid by bilinearity
    // even though matrix units are not unitary.
    auto probe = [&](const CMat &a) {
        return exact_energy(substitute_gate(c, gate_index, a), h);
    };
    std::vector<double> diag(static_cast<size_t>(d) * d);
    for (int o = 0; o < d; o++) {
        for (int i = 0; i < d; i++) {
            CMat a = CMat::Zero(d, d);
            a(o, i) = 1.0;
            diag[static_cast<size_t>(o) * d + i] = probe(a);
        }
    }
    for (int r = 0; r < d * d; r++) {
        int o1 = r / d, i1 = r % d;
        env.at(i1, o1, i1, o1) = diag[static_cast<size_t>(r)];
        for (int s = r + 1; s < d * d; s++) {
            int o2 = s / d, i2 = s % d;
            CMat a = CMat::Zero(d, d);
            a(o1, i1) = 1.0;
            a(o2, i2) = 1.0;
            double cross_re = probe(a) - diag[static_cast<size_t>(r)] - diag[static_cast<size_t>(s)];
            a(o2, i2) = cplx(0, 1);
            double cross_im = probe(a) - diag[static_cast<size_t>(r)] - diag[static_cast<size_t>(s)];
            // cross(lambda) = conj(lambda) P + lambda Q with
            // P = E[i1,o1,i2,o2], Q = E[i2,o2,i1,o1].
            cplx p = 0.5 * (cross_re + cplx(0, 1) * cross_im);
            cplx q = 0.5 * (cross_re - cplx(0, 1) * cross_im);
            env.at(i1, o1, i2, o2) = p;
            env.at(i2, o2, i1, o1) = q;
        }
    }
    return env;
}

CMat horizontal_pattern(int k, uint32_t i, uint32_t j) {
    // T[i1,o1,i2,o2] = sigma_i(o2,o1) * sigma_j(i1,i2), i.e. as a w-matrix
    // kron(sigma_j, sigma_i^T).
    CMat si = pauli_to_matrix(PauliString::from_index(k, i));
    CMat sj = pauli_to_matrix(PauliString::from_index(k, j));
    return kron(sj, si.transpose());
}

HorizontalCoefficients horizontal_decompose(const EnvironmentTensor &env) {
    const int k = env.k;
    const int d = env.dim();
    const int n_paulis = 1 << (2 * k);
    HorizontalCoefficients coeffs;
    coeffs.k = k;
    coeffs.e.resize(n_paulis, n_paulis);
    for (int i = 0; i < n_paulis; i++) {
        for (int j = 0; j < n_paulis; j++) {
            CMat pattern = horizontal_pattern(k, i, j);
            // patterns are orthogonal with Hilbert-Schmidt norm^2 = d^2
            cplx e_ij = (pattern.conjugate().cwiseProduct(env.w)).sum() / static_cast<double>(d);
            if (std::abs(e_ij.imag()) > 1e-9 * std::max(1.0, env.norm())) {
                throw std::logic_error("horizontal_decompose: coefficient not real");
            }
            coeffs.e(i, j) = e_ij.real();
        }
    }
    return coeffs;
}

EnvironmentTensor horizontal_reconstruct(const HorizontalCoefficients &coeffs) {
    const int k = coeffs.k;
    const int d = 1 << k;
    EnvironmentTensor env = EnvironmentTensor::zero(k);
    const int n_paulis = 1 << (2 * k);
    for (int i = 0; i < n_paulis; i++) {
        for (int j = 0; j < n_paulis; j++) {
            if (coeffs.e(i, j) == 0.0) {
                continue;
            }
            env.w += (coeffs.e(i, j) / d) * horizontal_pattern(k, i, j);
        }
    }
    return env;
}

EnvironmentTensor measurable_projection(const EnvironmentTensor &env) {
    HorizontalCoefficients coeffs = horizontal_decompose(env);
    const int n_paulis = coeffs.e.rows();
    for (int i = 1; i < n_paulis; i++) {
        coeffs.e(i, 0) = 0;
        coeffs.e(0, i) = 0;
    }
    return horizontal_reconstruct(coeffs);
}

long count_relevant(int k) {
    if (k < 1) {
        throw std::invalid_argument("count_relevant: k must be >= 1");
    }
    long non_identity = (1L << (2 * k)) - 1;
    return non_identity * non_identity + 1;
}

namespace {
long ipow(long base, int exp) {
    long out = 1;
    for (int i = 0; i < exp; i++) {
        out *= base;
    }
    return out;
}

long binom(int n, int r) {
    if (r < 0 || r > n) {
        return 0;
    }
    long out = 1;
    for (int i = 1; i <= r; i++) {
        out = out * (n - r + i) / i;
    }
    return out;
}
}  // namespace

long count_cnot_limited(int k, int t) {
    if (k < 1 || t < 0) {
        throw std::invalid_argument("count_cnot_limited: bad arguments");
    }
    if (t == 0) {
        return ipow(10, k);
    }
    // 6^l * 0.5^{l-1} = 2 * 3^l keeps every term an exact integer.
    long total = 2;
    for (int l = 0; l <= t; l++) {
        total += binom(k, l) * (ipow(6, l) * ipow(10, k - l) - 2 * ipow(3, l));
    }
    return std::min(total, count_relevant(k));
}

int min_cnot_for_full_tomography(int k, Connectivity connectivity) {
    if (k < 1) {
        throw std::invalid_argument("min_cnot_for_full_tomography: k must be >= 1");
    }
    return connectivity == Connectivity::AllToAll ? k : 2 * k - 2;
}

namespace {
// Unitary V with V^dag P V = diag(+1..,-1..): +1 eigenvectors first, so the
// diagonal equals Z (x) I^(k-1) in this library's bit convention.
CMat pauli_eigenbasis(const PauliString &p) {
    CMat m = pauli_to_matrix(p);
    Eigen::SelfAdjointEigenSolver<CMat> solver(m);
    const int d = static_cast<int>(m.rows());
    CMat v(d, d);
    int lo = 0, hi = 0;
    // eigenvalues come out ascending; place the +1 block first
    for (int i = 0; i < d; i++) {
        if (solver.eigenvalues()[i] > 0) {
            v.col(hi++) = solver.eigenvectors().col(i);
        } else {
            v.col(d / 2 + lo++) = solver.eigenvectors().col(i);
        }
    }
    return v;
}
}  // namespace

CMat maximizing_gate(const PauliString &p_i, const PauliString &p_j) {
    if (p_i.k != p_j.k) {
        throw std::invalid_argument("maximizing_gate: mismatched qubit counts");
    }
    if (p_i.is_identity_string() || p_j.is_identity_string()) {
        throw std::invalid_argument("maximizing_gate: identity string has constant trace");
    }
    if ((p_i.phase_exp & 1) || (p_j.phase_exp & 1)) {
        throw std::invalid_argument("maximizing_gate: strings must be Hermitian");
    }
    CMat v_i = pauli_eigenbasis(p_i);
    CMat v_j = pauli_eigenbasis(p_j);
    return v_i * v_j.adjoint();
}

CMat env_gradient(const EnvironmentTensor &env, const CMat &u) {
    const int d = env.dim();
    if (u.rows() != d || u.cols() != d) {
        throw std::invalid_argument("env_gradient: dimension mismatch");
    }
    CVec uvec(d * d);
    for (int i = 0; i < d; i++) {
        for (int o = 0; o < d; o++) {
            uvec[i * d + o] = u(o, i);
        }
    }
    CVec g_vec = env.w.transpose() * uvec;
    CMat g(d, d);
    for (int i2 = 0; i2 < d; i2++) {
        for (int o2 = 0; o2 < d; o2++) {
            g(o2, i2) = g_vec[i2 * d + o2];
        }
    }
    return g;
}

EnvironmentTensor perfect_square_environment(const CMat &linear_env) {
    const int d = static_cast<int>(linear_env.rows());
    int k = 0;
    while ((1 << k) < d) {
        k++;
    }
    if ((1 << k) != d) {
        throw std::invalid_argument("perfect_square_environment: dimension not a power of 2");
    }
    EnvironmentTensor env = EnvironmentTensor::zero(k);
    for (int i1 = 0; i1 < d; i1++) {
        for (int o1 = 0; o1 < d; o1++) {
            for (int i2 = 0; i2 < d; i2++) {
                for (int o2 = 0; o2 < d; o2++) {
                    env.at(i1, o1, i2, o2) =
                        std::conj(linear_env(o1, i1)) * linear_env(o2, i2);
                }
            }
        }
    }
    return env;
}

}  // namespace qlt
