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

#include "qlt/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qlt {

namespace {

const CMat &hadamard() {
    static const CMat h = [] {
        CMat m(2, 2);
        double s = 1.0 / std::sqrt(2.0);
        m << s, s, s, -s;
        return m;
    }();
    return h;
}

const CMat &y_rotation() {
    // H * Sdg maps the Y eigenbasis onto the computational basis.
    static const CMat m = [] {
        CMat sdg(2, 2);
        sdg << 1, 0, 0, cplx(0, -1);
        return CMat(hadamard() * sdg);
    }();
    return m;
}

}  // namespace

ShotSampler::ShotSampler(const Circuit &c, const Hamiltonian &h) : n_(c.n) {
    if (c.n != h.n) {
        throw std::invalid_argument("ShotSampler: qubit count mismatch");
    }
    StateVector base = run_circuit(c);
    const size_t n_groups = h.groups.size();
    double acc = 0;
    group_prob_cdf_.reserve(n_groups);
    group_inv_prob_.reserve(n_groups);
    bit_cdf_.resize(n_groups);
    term_masks_.resize(n_groups);
    for (size_t g = 0; g < n_groups; g++) {
        acc += h.group_probabilities[g];
        group_prob_cdf_.push_back(acc);
        group_inv_prob_.push_back(1.0 / h.group_probabilities[g]);

        StateVector rotated = base;
        for (int q = 0; q < n_; q++) {
            char axis = h.group_basis[g][q];
            if (axis == 'X') {
                apply_gate(rotated, hadamard(), {q});
            } else if (axis == 'Y') {
                apply_gate(rotated, y_rotation(), {q});
            }
        }
        auto &cdf = bit_cdf_[g];
        cdf.resize(static_cast<size_t>(rotated.amps.size()));
        double total = 0;
        for (Eigen::Index i = 0; i < rotated.amps.size(); i++) {
            total += std::norm(rotated.amps[i]);
            cdf[static_cast<size_t>(i)] = total;
        }
        for (int idx : h.groups[g]) {
            const PauliString &p = h.terms[idx].pauli;
            uint64_t mask = 0;
            for (int q = 0; q < n_; q++) {
                if (p.site_code(q) != 0) {
                    mask |= uint64_t{1} << (n_ - 1 - q);
                }
            }
            term_masks_[g].push_back({h.terms[idx].coeff, mask});
        }
    }
    group_prob_cdf_.back() = 1.0;
}

double ShotSampler::sample(Rng &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double r = unit(rng);
    size_t g = std::lower_bound(group_prob_cdf_.begin(), group_prob_cdf_.end(), r) -
               group_prob_cdf_.begin();
    if (g >= group_prob_cdf_.size()) {
        g = group_prob_cdf_.size() - 1;
    }
    const auto &cdf = bit_cdf_[g];
    double r2 = unit(rng) * cdf.back();
    uint64_t bits = static_cast<uint64_t>(
        std::lower_bound(cdf.begin(), cdf.end(), r2) - cdf.begin());
    if (bits >= cdf.size()) {
        bits = cdf.size() - 1;
    }
    double value = 0;
    for (const auto &[coeff, mask] : term_masks_[g]) {
        value += (std::popcount(bits & mask) & 1) ? -coeff : coeff;
    }
    return value * group_inv_prob_[g];
}

double ShotSampler::sample_mean(int n_shots, Rng &rng) {
    double acc = 0;
    for (int i = 0; i < n_shots; i++) {
        acc += sample(rng);
    }
    return acc / n_shots;
}

double single_shot_sample(const Circuit &c, const Hamiltonian &h, Rng &rng) {
    return ShotSampler(c, h).sample(rng);
}

}  // namespace qlt
