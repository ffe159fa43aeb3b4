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

#include "qlt/tableau.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace qlt {

namespace {

void check_qubit(int q, int k) {
    if (q < 0 || q >= k) {
        throw std::invalid_argument("clifford gate: qubit index out of range");
    }
}

PauliString single_gen(int k, int q, bool z) {
    PauliString p = PauliString::identity(k);
    if (z) {
        p.z_bits |= 1u << q;
    } else {
        p.x_bits |= 1u << q;
    }
    return p;
}

}  // namespace

std::vector<CliffordGate> parse_clifford_circuit(const std::string &text) {
    std::vector<CliffordGate> gates;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        CliffordGate g;
        size_t digits;
        if (tok.rfind("CX", 0) == 0) {
            g.kind = CliffordGate::CX;
            digits = 2;
        } else if (tok.rfind("SDG", 0) == 0) {
            g.kind = CliffordGate::SDG;
            digits = 3;
        } else if (tok[0] == 'H') {
            g.kind = CliffordGate::H;
            digits = 1;
        } else if (tok[0] == 'S') {
            g.kind = CliffordGate::S;
            digits = 1;
        } else if (tok[0] == 'X') {
            g.kind = CliffordGate::X;
            digits = 1;
        } else if (tok[0] == 'Y') {
            g.kind = CliffordGate::Y;
            digits = 1;
        } else if (tok[0] == 'Z') {
            g.kind = CliffordGate::Z;
            digits = 1;
        } else {
            throw std::invalid_argument("clifford circuit: unknown gate '" + tok + "'");
        }
        std::string rest = tok.substr(digits);
        if (g.kind == CliffordGate::CX) {
            if (rest.size() != 2 || !isdigit(rest[0]) || !isdigit(rest[1])) {
                throw std::invalid_argument("clifford circuit: bad CX token '" + tok + "'");
            }
            g.q0 = rest[0] - '0';
            g.q1 = rest[1] - '0';
            if (g.q0 == g.q1) {
                throw std::invalid_argument("clifford circuit: CX needs distinct qubits");
            }
        } else {
            if (rest.size() != 1 || !isdigit(rest[0])) {
                throw std::invalid_argument("clifford circuit: bad token '" + tok + "'");
            }
            g.q0 = rest[0] - '0';
        }
        gates.push_back(g);
    }
    return gates;
}

std::string clifford_circuit_str(const std::vector<CliffordGate> &gates) {
    std::string out;
    for (const auto &g : gates) {
        if (!out.empty()) {
            out += ' ';
        }
        switch (g.kind) {
            case CliffordGate::H: out += 'H'; break;
            case CliffordGate::S: out += 'S'; break;
            case CliffordGate::SDG: out += "SDG"; break;
            case CliffordGate::X: out += 'X'; break;
            case CliffordGate::Y: out += 'Y'; break;
            case CliffordGate::Z: out += 'Z'; break;
            case CliffordGate::CX: out += "CX"; break;
        }
        out += static_cast<char>('0' + g.q0);
        if (g.kind == CliffordGate::CX) {
            out += static_cast<char>('0' + g.q1);
        }
    }
    return out;
}

CliffordTableau CliffordTableau::identity(int k) {
    CliffordTableau t;
    t.k = k;
    t.images.reserve(2 * static_cast<size_t>(k));
    for (int q = 0; q < k; q++) {
        t.images.push_back(single_gen(k, q, false));
    }
    for (int q = 0; q < k; q++) {
        t.images.push_back(single_gen(k, q, true));
    }
    return t;
}

std::string CliffordTableau::key() const {
    std::string out;
    out.reserve(images.size() * 9);
    for (const auto &img : images) {
        out.append(reinterpret_cast<const char *>(&img.x_bits), 4);
        out.append(reinterpret_cast<const char *>(&img.z_bits), 4);
        out.push_back(static_cast<char>(img.phase_exp));
    }
    return out;
}

bool tableau_is_valid(const CliffordTableau &t) {
    int k = t.k;
    if (static_cast<int>(t.images.size()) != 2 * k) {
        return false;
    }
    for (const auto &img : t.images) {
        if (img.phase_exp != 0 && img.phase_exp != 2) {
            return false;
        }
    }
    for (int a = 0; a < 2 * k; a++) {
        for (int b = a + 1; b < 2 * k; b++) {
            bool should_anticommute = (b == a + k);
            bool commute = pauli_commutes(t.images[a], t.images[b]);
            if (commute == should_anticommute) {
                return false;
            }
        }
    }
    return true;
}

CliffordTableau tableau_compose(const CliffordTableau &second, const CliffordTableau &first) {
    if (second.k != first.k) {
        throw std::invalid_argument("tableau_compose: mismatched qubit counts");
    }
    CliffordTableau out;
    out.k = first.k;
    out.images.reserve(first.images.size());
    for (const auto &img : first.images) {
        out.images.push_back(tableau_conjugate(second, img));
    }
    return out;
}

CliffordTableau tableau_of_gate(int k, const CliffordGate &g) {
    check_qubit(g.q0, k);
    CliffordTableau t = CliffordTableau::identity(k);
    auto &x = t.images[g.q0];
    auto &z = t.images[static_cast<size_t>(k) + g.q0];
    switch (g.kind) {
        case CliffordGate::H:
            std::swap(x, z);
            break;
        case CliffordGate::S:
            // X -> Y, Z -> Z
            x.z_bits |= 1u << g.q0;
            break;
        case CliffordGate::SDG:
            // X -> -Y
            x.z_bits |= 1u << g.q0;
            x.phase_exp = 2;
            break;
        case CliffordGate::X:
            z.phase_exp = 2;
            break;
        case CliffordGate::Y:
            x.phase_exp = 2;
            z.phase_exp = 2;
            break;
        case CliffordGate::Z:
            x.phase_exp = 2;
            break;
        case CliffordGate::CX: {
            check_qubit(g.q1, k);
            // X_c -> X_c X_t, Z_t -> Z_c Z_t; X_t and Z_c unchanged.
            t.images[g.q0].x_bits |= 1u << g.q1;
            t.images[static_cast<size_t>(k) + g.q1].z_bits |= 1u << g.q0;
            break;
        }
    }
    return t;
}

CliffordTableau tableau_from_circuit(int k, const std::vector<CliffordGate> &gates) {
    CliffordTableau t = CliffordTableau::identity(k);
    for (const auto &g : gates) {
        t = tableau_compose(tableau_of_gate(k, g), t);
    }
    return t;
}

PauliString tableau_conjugate(const CliffordTableau &t, const PauliString &p) {
    if (t.k != p.k) {
        throw std::invalid_argument("tableau_conjugate: mismatched qubit counts");
    }
    // P = phase * i^{#Y} * prod_q X_q^{x_q} Z_q^{z_q}; conjugation maps each
    // generator to its image, in the same product order.
    PauliString acc = PauliString::identity(p.k);
    int n_y = 0;
    for (int q = 0; q < p.k; q++) {
        bool x = (p.x_bits >> q) & 1;
        bool z = (p.z_bits >> q) & 1;
        if (x && z) {
            n_y++;
        }
        if (x) {
            acc = pauli_compose(acc, t.x_image(q));
        }
        if (z) {
            acc = pauli_compose(acc, t.z_image(q));
        }
    }
    acc.phase_exp = static_cast<uint8_t>((acc.phase_exp + p.phase_exp + n_y) & 3);
    return acc;
}

CMat tableau_to_unitary(const CliffordTableau &t) {
    if (t.k > 6) {
        throw std::invalid_argument("tableau_to_unitary: k > 6");
    }
    const int k = t.k;
    const int d = 1 << k;
    // Column 0 is the state stabilized by the Z images; column x follows by
    // applying the X images selected by the bits of x.
    CMat proj = CMat::Identity(d, d);
    for (int q = 0; q < k; q++) {
        CMat m = pauli_to_matrix(t.z_image(q));
        proj = 0.5 * (proj + m * proj);
    }
    int best_col = 0;
    double best_norm = -1;
    for (int c = 0; c < d; c++) {
        double nc = proj.col(c).norm();
        if (nc > best_norm) {
            best_norm = nc;
            best_col = c;
        }
    }
    if (best_norm < 1e-8) {
        throw std::logic_error("tableau_to_unitary: stabilizer projector is null");
    }
    CVec psi0 = proj.col(best_col) / best_norm;

    std::vector<CMat> x_imgs(k);
    for (int q = 0; q < k; q++) {
        x_imgs[q] = pauli_to_matrix(t.x_image(q));
    }
    CMat u(d, d);
    for (int x = 0; x < d; x++) {
        CVec col = psi0;
        for (int q = 0; q < k; q++) {
            if ((x >> (k - 1 - q)) & 1) {
                col = x_imgs[q] * col;
            }
        }
        u.col(x) = col;
    }
    u = fix_global_phase(std::move(u));
    if (!is_unitary(u, 1e-10)) {
        throw std::logic_error("tableau_to_unitary: result not unitary");
    }
    return u;
}

CliffordTableau random_clifford(int k, Rng &rng) {
    if (k < 1) {
        throw std::invalid_argument("random_clifford: k must be >= 1");
    }
    CliffordTableau t = CliffordTableau::identity(k);
    const int word_len = 20 * k * k;
    std::uniform_int_distribution<int> kind_dist(0, k >= 2 ? 2 : 1);
    std::uniform_int_distribution<int> qubit_dist(0, k - 1);
    for (int i = 0; i < word_len; i++) {
        CliffordGate g;
        int kind = kind_dist(rng);
        if (kind == 0) {
            g.kind = CliffordGate::H;
            g.q0 = qubit_dist(rng);
        } else if (kind == 1) {
            g.kind = CliffordGate::S;
            g.q0 = qubit_dist(rng);
        } else {
            g.kind = CliffordGate::CX;
            g.q0 = qubit_dist(rng);
            do {
                g.q1 = qubit_dist(rng);
            } while (g.q1 == g.q0);
        }
        t = tableau_compose(tableau_of_gate(k, g), t);
    }
    return t;
}

std::vector<CliffordTableau> enumerate_clifford_group(int k) {
    if (k < 1 || k > 2) {
        throw std::invalid_argument("enumerate_clifford_group: only k in {1, 2} supported");
    }
    std::vector<CliffordTableau> generators;
    for (int q = 0; q < k; q++) {
        generators.push_back(tableau_of_gate(k, {CliffordGate::H, q}));
        generators.push_back(tableau_of_gate(k, {CliffordGate::S, q}));
    }
    if (k == 2) {
        generators.push_back(tableau_of_gate(k, {CliffordGate::CX, 0, 1}));
        generators.push_back(tableau_of_gate(k, {CliffordGate::CX, 1, 0}));
    }
    std::vector<CliffordTableau> out;
    std::unordered_set<std::string> seen;
    std::deque<CliffordTableau> frontier;
    CliffordTableau id = CliffordTableau::identity(k);
    seen.insert(id.key());
    out.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        CliffordTableau cur = frontier.front();
        frontier.pop_front();
        for (const auto &g : generators) {
            CliffordTableau next = tableau_compose(g, cur);
            if (seen.insert(next.key()).second) {
                out.push_back(next);
                frontier.push_back(next);
            }
        }
    }
    return out;
}

}  // namespace qlt
