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

#ifndef QLT_CIRCUIT_H
#define QLT_CIRCUIT_H

#include <vector>

#include "qlt/linalg.hpp"

namespace qlt {

struct Gate {
    CMat u;                    // 2^|support| unitary
    std::vector<int> support;  // ordered; support[0] owns the most significant local bit
};

struct Circuit {
    int n = 0;
    std::vector<Gate> gates;
};

struct StateVector {
    int n = 0;
    CVec amps;

    static StateVector zero_state(int n);
};

/// Applies a gate in place, touching only its support indices. Qubit q maps
/// to state-index bit (n-1-q).
void apply_gate(StateVector &state, const CMat &u, const std::vector<int> &support);

/// (product of gates) |0...0>, n <= 14.
StateVector run_circuit(const Circuit &c);

/// New circuit with the gate at `index` replaced by `u`.
Circuit substitute_gate(const Circuit &c, size_t index, const CMat &u);

void check_circuit(const Circuit &c);

/// layers x (n-1) Haar-random two-qubit gates on supports (0,1),(1,2),...
Circuit staircase_ansatz(int n, int layers, Rng &rng);

}  // namespace qlt

#endif
