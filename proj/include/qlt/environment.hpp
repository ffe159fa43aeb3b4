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

#ifndef QLT_ENVIRONMENT_H
#define QLT_ENVIRONMENT_H

#include <string>
#include <vector>

#include "qlt/hamiltonian.hpp"
#include "qlt/pauli.hpp"

namespace qlt {

/// Rank-4 environment tensor E[i1,o1,i2,o2] of a k-qubit gate slot, stored as
/// the d^2 x d^2 matrix w(i1*d+o1, i2*d+o2).
///
/// Index convention: contract(E, U, V) = sum E[i1,o1,i2,o2] U(o1,i1) V(i2,o2),
/// and the physical symmetric cost is f(U) = contract(E, U, U^dag). For an
/// environment of Hermitian physical origin, w is Hermitian and f is real for
/// every U.
struct EnvironmentTensor {
    int k = 0;
    CMat w;

    static EnvironmentTensor zero(int k);
    int dim() const { return 1 << k; }

    cplx &at(int i1, int o1, int i2, int o2);
    cplx at(int i1, int o1, int i2, int o2) const;

    double hermiticity_error() const;
    double norm() const { return w.norm(); }

    std::string to_json() const;
    static EnvironmentTensor from_json(const std::string &text);
};

/// Coefficients of the horizontal Pauli-pair decomposition
/// f(U) = (1/d) sum_{ij} e(i,j) tr(sigma_i U sigma_j U^dag), with index 0 the
/// identity string. Real when the tensor is Hermitian.
struct HorizontalCoefficients {
    int k = 0;
    RMat e;  // 4^k x 4^k
};

cplx contract(const EnvironmentTensor &env, const CMat &u, const CMat &v);

/// Symmetric contraction f(U) = contract(E, U, U^dag), checked real.
double contract_sym(const EnvironmentTensor &env, const CMat &u);

/// E such that contract(E, A, B) equals the cost of the circuit with A
/// substituted in the ket branch and B in the bra branch of the gate slot.
/// Extracted with d^4 matrix-unit probe pairs through the simulator.
EnvironmentTensor exact_environment(const Circuit &c, const Hamiltonian &h, size_t gate_index);

/// Pattern tensor of the pair (sigma_i, sigma_j): the tensor T with
/// contract(T, U, U^dag) = tr(sigma_i U sigma_j U^dag), as a w-matrix.
CMat horizontal_pattern(int k, uint32_t i, uint32_t j);

HorizontalCoefficients horizontal_decompose(const EnvironmentTensor &env);
EnvironmentTensor horizontal_reconstruct(const HorizontalCoefficients &coeffs);

/// Zeroes every pair with exactly one identity index; those components cannot
/// influence f(U, U^dag) for any U, so the symmetric cost is unchanged.
EnvironmentTensor measurable_projection(const EnvironmentTensor &env);

/// (4^k - 1)^2 + 1.
long count_relevant(int k);

enum class Connectivity { AllToAll, Linear };

/// Measurable components of a k-qubit environment when the probe gates may
/// use at most t CNOTs (all-to-all connectivity):
/// t = 0 -> 10^k; otherwise 2 + sum_{l=0}^{t} 6^l C(k,l) (10^{k-l} - 0.5^{l-1}),
/// capped at count_relevant(k).
long count_cnot_limited(int k, int t);

/// Sequential CNOTs needed for full tomography: k (all-to-all), 2k-2 (linear).
/// Note the formulas disagree at k = 1 (1 vs 0) although single-qubit
/// tomography needs no CNOT at all; returned verbatim.
int min_cnot_for_full_tomography(int k, Connectivity connectivity);

/// Unitary U with tr(sigma_i U sigma_j U^dag) = 2^k, built from the eigenbasis
/// transforms of the two strings. Both strings must be non-identity.
CMat maximizing_gate(const PauliString &p_i, const PauliString &p_j);

/// Wirtinger gradient G(o2,i2) = d f / d conj(U(o2,i2)); a step delta changes
/// the symmetric cost by 2 Re tr(G^dag delta) + O(delta^2).
CMat env_gradient(const EnvironmentTensor &env, const CMat &u);

/// Environment of a perfect-square cost f(U) = |tr(E_L^dag U)|^2.
EnvironmentTensor perfect_square_environment(const CMat &linear_env);

}  // namespace qlt

#endif
