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

#ifndef QLT_ESTIMATORS_H
#define QLT_ESTIMATORS_H

#include <string>
#include <vector>

#include "qlt/cover.hpp"
#include "qlt/design.hpp"
#include "qlt/sampling.hpp"

namespace qlt {

/// Single-shot cost samples tagged with the gate that produced them.
struct ShotBatch {
    std::vector<std::pair<int, double>> samples;  // (gate index, value)
    size_t target_gate = 0;
    uint64_t rng_seed = 0;
};

struct Reconstruction {
    EnvironmentTensor estimate;
    long shots_used = 0;
    long gates_used = 0;
    double trace_inv_pseudo = 0;
    double mean_shot_variance = 0;
    double predicted_variance = 0;
    bool coverage_complete = true;
    std::string warning;
};

/// Per shot: pick the gate (cycle or uniform, per the set's mode), substitute
/// it at the target slot, draw one cost sample. shots = 0 records one exact
/// cost value per gate instead (the noiseless limit).
ShotBatch collect_samples(const Circuit &c, size_t gate_index, const GateSet &gs,
                          long n_shots, const Hamiltonian &h, Rng &rng);

/// Least-squares solve v = (M^T W M)^+ M^T W ybar over the per-gate averaged
/// samples (identical to per-shot least squares; set aggregate = false to
/// build the literal per-shot system). The estimate is projected onto the
/// measurable+constant subspace.
Reconstruction regress(const DesignMatrix &dm, const ShotBatch &batch, bool aggregate = true);

enum class UniformSource { Haar, CliffordGroup };
enum class UniformEstimator { Regression, ClosedFormShadow };

/// Uniform landscape tomography of the gate at gate_index. With the Clifford
/// group source the gates cycle through all group elements; with the Haar
/// source every shot draws a fresh gate. The closed-form shadow path averages
/// single-shot shadows and inverts the 2-design second moment:
/// coordinates scale by (d^2-1) except the constant one.
Reconstruction uniform_tomography(const Circuit &c, size_t gate_index, const Hamiltonian &h,
                                  long n_shots, UniformSource source,
                                  UniformEstimator estimator, Rng &rng);

/// The 4^k gates P_m U0 probing one tableau group, their Pauli pairs
/// (i, j) with sigma_i = +-(U0 sigma_j U0^dag), and the +-1 sign matrix
/// sign(m, p) = (1/d) tr(sigma_ip (P_m U0) sigma_jp (P_m U0)^dag).
/// The sign matrix satisfies sign * sign^T = 4^k I exactly.
struct TableauxGroup {
    int k = 0;
    std::vector<CMat> gates;
    std::vector<CliffordTableau> gate_tableaux;
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    Eigen::MatrixXi sign;
};

TableauxGroup tableaux_group(const CliffordTableau &u0);

/// Tableaux-based tomography: per group, estimate the 4^k gate costs, invert
/// the orthogonal sign matrix, and average coefficients measured by several
/// groups. shots_per_circuit = 0 uses exact cost values.
Reconstruction tableaux_tomography(const Circuit &c, size_t gate_index, const Hamiltonian &h,
                                   const CliffordCover &cover, long shots_per_circuit, Rng &rng);

}  // namespace qlt

#endif
