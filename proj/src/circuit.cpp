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

#include "qlt/circuit.hpp"

#include <stdexcept>

namespace qlt {

StateVector StateVector::zero_state(int n) {
    StateVector s;
    s.n = n;
    s.amps = CVec::Zero(Eigen::Index{1} << n);
    s.amps[0] = 1.0;
    return s;
}

void apply_gate(StateVector &state, const CMat &u, const std::vector<int> &support) {
    const int n = state.n;
    const int m = static_cast<int>(support.size());
    if (u.rows() != (1 << m) || u.cols() != (1 << m)) {
        throw std::invalid_argument("apply_gate: matrix dimension does not match support");
    }
    uint64_t support_mask = 0;
    std::vector<uint64_t> local_bit(m);
    for (int j = 0; j < m; j++) {
        int q = support[j];
        if (q < 0 || q >= n) {
            throw std::invalid_argument("apply_gate: support index out of range");
        }
        local_bit[j] = uint64_t{1} << (n - 1 - q);
        if (support_mask & local_bit[j]) {
            throw std::invalid_argument("apply_gate: repeated support index");
        }
        support_mask |= local_bit[j];
    }
    const uint64_t dim = uint64_t{1} << n;
    const int sub = 1 << m;
    std::vector<uint64_t> offsets(sub);
    for (int l = 0; l < sub; l++) {
        uint64_t off = 0;
        for (int j = 0; j < m; j++) {
            if ((l >> (m - 1 - j)) & 1) {
                off |= local_bit[j];
            }
        }
        offsets[l] = off;
    }
    CVec scratch(sub);
    for (uint64_t base = 0; base < dim; base++) {
        if (base & support_mask) {
            continue;
        }
        for (int l = 0; l < sub; l++) {
            scratch[l] = state.amps[static_cast<Eigen::Index>(base | offsets[l])];
        }
        for (int r = 0; r < sub; r++) {
            cplx acc = 0;
            for (int cidx = 0; cidx < sub; cidx++) {
                acc += u(r, cidx) * scratch[cidx];
            }
            state.amps[static_cast<Eigen::Index>(base | offsets[r])] = acc;
        }
    }
}

void check_circuit(const Circuit &c) {
    if (c.n < 1 || c.n > 14) {
        throw std::invalid_argument("circuit: n must be in [1, 14]");
    }
    for (const auto &g : c.gates) {
        if (g.u.rows() != (Eigen::Index{1} << g.support.size())) {
            throw std::invalid_argument("circuit: gate dimension does not match support");
        }
        for (int q : g.support) {
            if (q < 0 || q >= c.n) {
                throw std::invalid_argument("circuit: support outside [0, n)");
            }
        }
    }
}

StateVector run_circuit(const Circuit &c) {
    check_circuit(c);
    StateVector state = StateVector::zero_state(c.n);
    for (const auto &g : c.gates) {
        apply_gate(state, g.u, g.support);
    }
    return state;
}

Circuit substitute_gate(const Circuit &c, size_t index, const CMat &u) {
    if (index >= c.gates.size()) {
        throw std::invalid_argument("substitute_gate: index out of range");
    }
    if (u.rows() != c.gates[index].u.rows() || u.cols() != c.gates[index].u.cols()) {
        throw std::invalid_argument("substitute_gate: dimension mismatch");
    }
    Circuit out = c;
    out.gates[index].u = u;
    return out;
}

Circuit staircase_ansatz(int n, int layers, Rng &rng) {
    if (n < 2) {
        throw std::invalid_argument("staircase_ansatz: n must be >= 2");
    }
    Circuit c;
    c.n = n;
    for (int layer = 0; layer < layers; layer++) {
        for (int q = 0; q + 1 < n; q++) {
            c.gates.push_back({haar_random_unitary(4, rng), {q, q + 1}});
        }
    }
    return c;
}

}  // namespace qlt
