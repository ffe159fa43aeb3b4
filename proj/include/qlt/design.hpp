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

#ifndef QLT_DESIGN_H
#define QLT_DESIGN_H

#include <memory>
#include <optional>
#include <vector>

#include "qlt/environment.hpp"
#include "qlt/tableau.hpp"

namespace qlt {

/// Orthonormal basis of the environment-tensor space. Elements are stored as
/// sparse (row, col, value) entries of their w-matrices, Hilbert-Schmidt
/// normalized. Column 0 is always the constant component.
struct EnvBasis {
    struct Element {
        // entries sorted by r * d^2 + c
        std::vector<std::tuple<int, int, cplx>> entries;
    };

    int k = 0;
    std::vector<Element> elements;
    std::vector<bool> measurable;  // true for constant + measurable columns
    // Set for the plain horizontal basis: column of each Pauli pair.
    std::vector<std::pair<int, int>> pair_of_col;
    bool is_horizontal = false;

    int n_cols() const { return static_cast<int>(elements.size()); }
    int n_kept() const;  // number of measurable+constant columns

    /// Column index of pair (i, j) in the horizontal layout.
    static int col_of_pair(int k, uint32_t i, uint32_t j);

    double gram_error() const;  // max |<B_a, B_b> - delta_ab|

    /// Coordinates <B_j, E> of a tensor in this basis.
    RVec coords_of(const EnvironmentTensor &env) const;
    EnvironmentTensor tensor_from_coords(const RVec &v) const;

    /// Projection value contract(B_j, U, U^dag), real part (imaginary part is
    /// checked small).
    double project_gate(int col, const CVec &uvec) const;
};

/// Normalized horizontal Pauli-pair basis: column 0 the constant pair (0,0),
/// then the (4^k-1)^2 measurable pairs, then the non-measurable ones.
EnvBasis horizontal_basis(int k);

/// Rotates the measurable non-constant columns by a seeded random orthogonal
/// mix; still orthonormal, no longer pair-aligned.
EnvBasis rotated_basis(const EnvBasis &basis, uint64_t seed);

/// Vector u with u[(i,o)] = U(o,i), the layout used by the contraction.
CVec gate_vec(const CMat &u);

struct GateSet {
    enum class Mode { Cycle, UniformRandom };

    int k = 0;
    std::vector<CMat> gates;
    // Parallel to gates when the gate came from a tableau; enables the exact
    // integer design-matrix rows.
    std::vector<std::optional<CliffordTableau>> tableaux;
    Mode mode = Mode::Cycle;

    size_t size() const { return gates.size(); }
};

GateSet gate_set_from_tableaux(const std::vector<CliffordTableau> &tabs,
                               GateSet::Mode mode = GateSet::Mode::Cycle);

/// Cached full Clifford group as a gate set (k <= 2).
const GateSet &clifford_group_gate_set(int k);

/// Rows of gate projections onto the environment basis; M v_E gives the exact
/// cost values of the gates.
struct DesignMatrix {
    RMat m;  // n_gates x n_cols
    std::shared_ptr<const EnvBasis> basis;
};

DesignMatrix build_design_matrix(const GateSet &gs, const EnvBasis &basis);

struct DesignDiagnostics {
    RMat second_moment;       // M^T M
    double trace_inv_pseudo;  // Tr[(M^T M / N)^+] on the measurable+constant block
    double frame_lower = 0;   // smallest nonzero eigenvalue of M^T M
    double frame_upper = 0;   // largest
    int rank = 0;
    bool covers_measurable = false;

    /// Predicted reconstruction variance for n_shots single shots with the
    /// given mean per-shot cost variance.
    double predicted_variance(double mean_shot_variance, long n_shots) const {
        return trace_inv_pseudo * mean_shot_variance / static_cast<double>(n_shots);
    }
};

DesignDiagnostics design_diagnostics(const DesignMatrix &dm);

/// (1/N^2) sum_{ij} |tr(U_i^dag U_j)|^4; equals 2 exactly for a 2-design.
double frame_potential(const GateSet &gs);

}  // namespace qlt

#endif
