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

#ifndef QLT_TABLEAU_H
#define QLT_TABLEAU_H

#include <string>
#include <vector>

#include "qlt/pauli.hpp"

namespace qlt {

struct CliffordGate {
    enum Kind { H, S, SDG, X, Y, Z, CX };
    Kind kind;
    int q0 = 0;
    int q1 = 0;  // CX target
};

/// Parses whitespace-separated tokens like "H0 S1 SDG0 CX01" (CX control
/// digit first). Qubit indices are single digits.
std::vector<CliffordGate> parse_clifford_circuit(const std::string &text);
std::string clifford_circuit_str(const std::vector<CliffordGate> &gates);

/// A Clifford gate described by the images of the 2k X/Z generators under
/// conjugation U P U^dag, each a signed Pauli string. Two Cliffords are equal
/// modulo global phase iff their tableaux are identical.
struct CliffordTableau {
    int k = 0;
    // images[q] = U X_q U^dag, images[k+q] = U Z_q U^dag; phases are +-1.
    std::vector<PauliString> images;

    static CliffordTableau identity(int k);

    const PauliString &x_image(int q) const { return images[q]; }
    const PauliString &z_image(int q) const { return images[static_cast<size_t>(k) + q]; }

    /// Canonical byte encoding (bits plus sign bits) used for dedup.
    std::string key() const;

    bool operator==(const CliffordTableau &other) const = default;
};

/// Checks the commutation structure of the images (anticommute within a
/// generator pair, commute across pairs), i.e. the GF(2) symplectic property.
bool tableau_is_valid(const CliffordTableau &t);

/// Tableau of U2*U1 from second = tableau(U2), first = tableau(U1).
CliffordTableau tableau_compose(const CliffordTableau &second, const CliffordTableau &first);

CliffordTableau tableau_of_gate(int k, const CliffordGate &g);

/// Composition of the per-gate tableaux in circuit order (earliest gate acts
/// first on states).
CliffordTableau tableau_from_circuit(int k, const std::vector<CliffordGate> &gates);

/// U P U^dag as a signed Pauli string, by composing generator images.
PauliString tableau_conjugate(const CliffordTableau &t, const PauliString &p);

/// A unitary realizing the tableau (k <= 6), with the global phase fixed so
/// the first nonzero entry of column 0 is real positive.
CMat tableau_to_unitary(const CliffordTableau &t);

/// Random Clifford via a fixed-length random word (length 20 k^2) over
/// {H, S, CNOT}. Full support over the group; not exactly uniform. The
/// generating word is written to *word when given.
CliffordTableau random_clifford(int k, Rng &rng, std::vector<CliffordGate> *word = nullptr);

/// One representative per Clifford group element modulo global phase;
/// 24 elements at k=1, 11520 at k=2.
std::vector<CliffordTableau> enumerate_clifford_group(int k);

}  // namespace qlt

#endif
