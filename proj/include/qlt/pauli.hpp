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

#ifndef QLT_PAULI_H
#define QLT_PAULI_H

#include <cstdint>
#include <string>

#include "qlt/linalg.hpp"

namespace qlt {

/// A k-qubit Pauli operator in symplectic form, with the phase tracked as a
/// power of i so all products stay in exact integer arithmetic.
///
/// Site q of the string is I/X/Y/Z according to (x bit q, z bit q) being
/// (0,0)/(1,0)/(1,1)/(0,1). The dense form is phase() times the Kronecker
/// product of the per-site matrices with qubit 0 as the leftmost factor, so
/// qubit 0 owns the most significant bit of a matrix index.
struct PauliString {
    int k = 0;
    uint32_t x_bits = 0;
    uint32_t z_bits = 0;
    uint8_t phase_exp = 0;  // phase = i^phase_exp

    static PauliString identity(int k);

    /// Parses "XZ", "-iYI", "+Z", ... (phase prefix optional).
    static PauliString parse(const std::string &text);

    /// Builds the phase-free string with the given site codes, where
    /// index = sum over sites of code * 4^(k-1-q), code in {0:I,1:X,2:Y,3:Z}.
    static PauliString from_index(int k, uint32_t index);

    cplx phase() const;
    bool is_identity_string() const { return x_bits == 0 && z_bits == 0; }
    int site_code(int q) const;  // 0:I 1:X 2:Y 3:Z
    uint32_t index() const;
    int weight() const;  // number of non-identity sites

    /// Same string, same phase.
    bool operator==(const PauliString &other) const = default;

    std::string str() const;
};

/// Exact operator product P*Q including the phase.
PauliString pauli_compose(const PauliString &p, const PauliString &q);

/// True iff PQ = QP, from the symplectic inner product.
bool pauli_commutes(const PauliString &p, const PauliString &q);

/// Dense matrix form (k <= 12).
CMat pauli_to_matrix(const PauliString &p);

/// Applies P to a computational-basis expansion without materializing the
/// matrix: out[b ^ xmask] += phase * (-1)^popcount(zmask & b) * in[b],
/// with qubit q mapped to state bit (k-1-q).
void pauli_apply(const PauliString &p, const CVec &in, CVec &out);

}  // namespace qlt

#endif
