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

#include "qlt/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace qlt {

Hamiltonian Hamiltonian::make(int n, std::vector<HamTerm> terms,
                              std::vector<std::vector<int>> groups,
                              std::vector<double> probabilities) {
    Hamiltonian h;
    h.n = n;
    h.terms = std::move(terms);
    h.groups = std::move(groups);
    for (const auto &t : h.terms) {
        if (t.pauli.k != n) {
            throw std::invalid_argument("hamiltonian: term qubit count mismatch");
        }
        if (t.pauli.phase_exp != 0) {
            throw std::invalid_argument("hamiltonian: term phases must be +1");
        }
    }
    std::vector<int> seen(h.terms.size(), 0);
    for (const auto &group : h.groups) {
        for (int idx : group) {
            if (idx < 0 || idx >= static_cast<int>(h.terms.size())) {
                throw std::invalid_argument("hamiltonian: group references missing term");
            }
            seen[idx]++;
        }
    }
    for (int count : seen) {
        if (count != 1) {
            throw std::invalid_argument("hamiltonian: every term must be in exactly one group");
        }
    }
    // Each group's basis: per qubit, all non-identity sites must agree.
    h.group_basis.resize(h.groups.size());
    for (size_t g = 0; g < h.groups.size(); g++) {
        std::vector<char> basis(n, 'Z');
        std::vector<bool> fixed(n, false);
        for (int idx : h.groups[g]) {
            const PauliString &p = h.terms[idx].pauli;
            for (int q = 0; q < n; q++) {
                int code = p.site_code(q);
                if (code == 0) {
                    continue;
                }
                char axis = "IXYZ"[code];
                if (fixed[q] && basis[q] != axis) {
                    throw std::invalid_argument("hamiltonian: group not qubit-wise compatible");
                }
                basis[q] = axis;
                fixed[q] = true;
            }
        }
        h.group_basis[g] = std::move(basis);
    }
    if (probabilities.empty()) {
        h.group_probabilities.assign(h.groups.size(), 1.0 / static_cast<double>(h.groups.size()));
    } else {
        if (probabilities.size() != h.groups.size()) {
            throw std::invalid_argument("hamiltonian: probability count mismatch");
        }
        double total = 0;
        for (double p : probabilities) {
            if (p <= 0) {
                throw std::invalid_argument("hamiltonian: probabilities must be positive");
            }
            total += p;
        }
        for (double &p : probabilities) {
            p /= total;
        }
        h.group_probabilities = std::move(probabilities);
    }
    return h;
}

std::string Hamiltonian::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["terms"] = nlohmann::json::array();
    for (const auto &t : terms) {
        // strings stored without the leading "+"
        j["terms"].push_back({{"coeff", t.coeff}, {"pauli", t.pauli.str().substr(1)}});
    }
    j["groups"] = groups;
    j["group_probabilities"] = group_probabilities;
    return j.dump();
}

Hamiltonian Hamiltonian::from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<HamTerm> terms;
    for (const auto &jt : j.at("terms")) {
        terms.push_back({jt.at("coeff").get<double>(),
                         PauliString::parse(jt.at("pauli").get<std::string>())});
    }
    std::vector<std::vector<int>> groups = j.at("groups").get<std::vector<std::vector<int>>>();
    std::vector<double> probs;
    if (j.contains("group_probabilities")) {
        probs = j.at("group_probabilities").get<std::vector<double>>();
    }
    return Hamiltonian::make(n, std::move(terms), std::move(groups), std::move(probs));
}

Hamiltonian ising_open_chain(int n, double j_z, double h_x) {
    if (n < 2) {
        throw std::invalid_argument("ising_open_chain: n must be >= 2");
    }
    std::vector<HamTerm> terms;
    std::vector<int> z_group, x_group;
    for (int i = 0; i + 1 < n; i++) {
        PauliString p = PauliString::identity(n);
        p.z_bits = (1u << i) | (1u << (i + 1));
        z_group.push_back(static_cast<int>(terms.size()));
        terms.push_back({j_z, p});
    }
    for (int i = 0; i < n; i++) {
        PauliString p = PauliString::identity(n);
        p.x_bits = 1u << i;
        x_group.push_back(static_cast<int>(terms.size()));
        terms.push_back({-h_x, p});
    }
    return Hamiltonian::make(n, std::move(terms), {z_group, x_group});
}

double energy_of_state(const StateVector &state, const Hamiltonian &h) {
    if (state.n != h.n) {
        throw std::invalid_argument("energy_of_state: qubit count mismatch");
    }
    CVec scratch;
    cplx total = 0;
    for (const auto &t : h.terms) {
        pauli_apply(t.pauli, state.amps, scratch);
        total += t.coeff * state.amps.dot(scratch);
    }
    if (std::abs(total.imag()) > 1e-9) {
        throw std::logic_error("energy_of_state: imaginary residue too large");
    }
    return total.real();
}

double exact_energy(const Circuit &c, const Hamiltonian &h) {
    StateVector state = run_circuit(c);
    return energy_of_state(state, h);
}

double exact_ground_energy(const Hamiltonian &h) {
    if (h.n > 12) {
        throw std::invalid_argument("exact_ground_energy: n > 12");
    }
    const Eigen::Index d = Eigen::Index{1} << h.n;
    CMat m = CMat::Zero(d, d);
    CVec col(d), out(d);
    for (Eigen::Index c = 0; c < d; c++) {
        col.setZero();
        col[c] = 1.0;
        for (const auto &t : h.terms) {
            pauli_apply(t.pauli, col, out);
            m.col(c) += t.coeff * out;
        }
    }
    Eigen::SelfAdjointEigenSolver<CMat> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()[0];
}

}  // namespace qlt
