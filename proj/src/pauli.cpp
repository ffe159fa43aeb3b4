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

#include "qlt/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qlt {

namespace {

// phase exponent table for single-site products A*B = i^t * C,
// indexed [code(A)][code(B)] over I,X,Y,Z.
constexpr int kMulPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},  // X*Y = iZ, X*Z = -iY
    {0, 3, 0, 1},  // Y*X = -iZ, Y*Z = iX
    {0, 1, 3, 0},  // Z*X = iY, Z*Y = -iX
};

constexpr char kSiteChar[4] = {'I', 'X', 'Y', 'Z'};

int code_from_bits(int x, int z) {
    return x ? (z ? 2 : 1) : (z ? 3 : 0);
}

void check_same_k(const PauliString &p, const PauliString &q) {
    if (p.k != q.k) {
        throw std::invalid_argument("pauli: mismatched qubit counts");
    }
}

}  // namespace

PauliString PauliString::identity(int k) {
    PauliString p;
    p.k = k;
    return p;
}

PauliString PauliString::parse(const std::string &text) {
    size_t pos = 0;
    uint8_t phase_exp = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            phase_exp = 2;
        }
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase_exp = (phase_exp + 1) & 3;
        pos++;
    }
    PauliString p;
    p.phase_exp = phase_exp;
    for (; pos < text.size(); pos++) {
        int q = p.k++;
        switch (text[pos]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x_bits |= 1u << q;
                break;
            case 'Y':
                p.x_bits |= 1u << q;
                p.z_bits |= 1u << q;
                break;
            case 'Z':
                p.z_bits |= 1u << q;
                break;
            default:
                throw std::invalid_argument("pauli: bad character in '" + text + "'");
        }
    }
    if (p.k == 0) {
        throw std::invalid_argument("pauli: empty string");
    }
    return p;
}

PauliString PauliString::from_index(int k, uint32_t index) {
    PauliString p;
    p.k = k;
    for (int q = k - 1; q >= 0; q--) {
        int code = index & 3;
        index >>= 2;
        if (code == 1 || code == 2) {
            p.x_bits |= 1u << q;
        }
        if (code == 2 || code == 3) {
            p.z_bits |= 1u << q;
        }
    }
    return p;
}

cplx PauliString::phase() const {
    static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_exp & 3];
}

int PauliString::site_code(int q) const {
    return code_from_bits((x_bits >> q) & 1, (z_bits >> q) & 1);
}

uint32_t PauliString::index() const {
    uint32_t idx = 0;
    for (int q = 0; q < k; q++) {
        idx = (idx << 2) | static_cast<uint32_t>(site_code(q));
    }
    return idx;
}

int PauliString::weight() const {
    return std::popcount((x_bits | z_bits) & ((1u << k) - 1));
}

std::string PauliString::str() const {
    std::string out;
    switch (phase_exp & 3) {
        case 0: out = "+"; break;
        case 1: out = "+i"; break;
        case 2: out = "-"; break;
        case 3: out = "-i"; break;
    }
    for (int q = 0; q < k; q++) {
        out += kSiteChar[site_code(q)];
    }
    return out;
}

PauliString pauli_compose(const PauliString &p, const PauliString &q) {
    check_same_k(p, q);
    PauliString out;
    out.k = p.k;
    out.x_bits = p.x_bits ^ q.x_bits;
    out.z_bits = p.z_bits ^ q.z_bits;
    int t = p.phase_exp + q.phase_exp;
    for (int q_i = 0; q_i < p.k; q_i++) {
        t += kMulPhase[p.site_code(q_i)][q.site_code(q_i)];
    }
    out.phase_exp = static_cast<uint8_t>(t & 3);
    return out;
}

bool pauli_commutes(const PauliString &p, const PauliString &q) {
    check_same_k(p, q);
    int anti = std::popcount(p.x_bits & q.z_bits) + std::popcount(p.z_bits & q.x_bits);
    return (anti & 1) == 0;
}

CMat pauli_to_matrix(const PauliString &p) {
    if (p.k > 12) {
        throw std::invalid_argument("pauli_to_matrix: k > 12");
    }
    static const CMat singles[4] = {
        (CMat(2, 2) << 1, 0, 0, 1).finished(),
        (CMat(2, 2) << 0, 1, 1, 0).finished(),
        (CMat(2, 2) << 0, cplx(0, -1), cplx(0, 1), 0).finished(),
        (CMat(2, 2) << 1, 0, 0, -1).finished(),
    };
    CMat m = CMat::Identity(1, 1);
    for (int q = 0; q < p.k; q++) {
        m = kron(m, singles[p.site_code(q)]);
    }
    return p.phase() * m;
}

void pauli_apply(const PauliString &p, const CVec &in, CVec &out) {
    const int k = p.k;
    const uint64_t dim = uint64_t{1} << k;
    uint64_t xmask = 0;
    uint64_t zmask = 0;
    int n_y = 0;
    for (int q = 0; q < k; q++) {
        uint64_t bit = uint64_t{1} << (k - 1 - q);
        int code = p.site_code(q);
        if (code == 1 || code == 2) {
            xmask |= bit;
        }
        if (code == 2 || code == 3) {
            zmask |= bit;
        }
        if (code == 2) {
            n_y++;
        }
    }
    // P = phase * i^{#Y} * X^x Z^z as an operator.
    static const cplx itab[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    cplx base = itab[(p.phase_exp + n_y) & 3];
    out.resize(static_cast<Eigen::Index>(dim));
    for (uint64_t b = 0; b < dim; b++) {
        cplx v = base * in[static_cast<Eigen::Index>(b)];
        if (std::popcount(b & zmask) & 1) {
            v = -v;
        }
        out[static_cast<Eigen::Index>(b ^ xmask)] = v;
    }
}

}  // namespace qlt
