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

#ifndef QLT_HAMILTONIAN_H
#define QLT_HAMILTONIAN_H

#include <string>
#include <vector>

#include "qlt/circuit.hpp"
#include "qlt/pauli.hpp"

namespace qlt {

struct HamTerm {
    double coeff;
    PauliString pauli;  // phase must be +1
};

/// Pauli-sum observable with its terms partitioned into groups that are
/// simultaneously measurable in one product-Pauli basis.
struct Hamiltonian {
    int n = 0;
    std::vector<HamTerm> terms;
    std::vector<std::vector<int>> groups;
    std::vector<double> group_probabilities;      // sampling weights, sum to 1
    std::vector<std::vector<char>> group_basis;   // per group, per qubit: 'X','Y','Z'

    /// Validates term/group structure, derives each group's measurement
    /// basis, and defaults the sampling weights to uniform.
    static Hamiltonian make(int n, std::vector<HamTerm> terms,
                            std::vector<std::vector<int>> groups,
                            std::vector<double> probabilities = {});

    std::string to_json() const;
    static Hamiltonian from_json(const std::string &text);
};

/// Open-chain transverse-field Ising model sum_i Jz Z_i Z_{i+1} - hx sum_i X_i
/// grouped into one all-Z and one all-X measurement setting.
Hamiltonian ising_open_chain(int n, double j_z, double h_x);

double energy_of_state(const StateVector &state, const Hamiltonian &h);

/// sum_i coeff_i <psi|P_i|psi> for psi = run_circuit(c).
double exact_energy(const Circuit &c, const Hamiltonian &h);

/// Minimum eigenvalue of the dense 2^n x 2^n matrix (n <= 12).
double exact_ground_energy(const Hamiltonian &h);

}  // namespace qlt

#endif
