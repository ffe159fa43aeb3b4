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

#ifndef QLT_SAMPLING_H
#define QLT_SAMPLING_H

#include <vector>

#include "qlt/hamiltonian.hpp"

namespace qlt {

/// Unbiased single-shot cost sampler for one prepared circuit.
///
/// Per shot: a basis group g is drawn with probability p_g, one bitstring is
/// sampled from the state rotated into that group's product basis, and the
/// group's terms are summed with their +-1 eigenvalues and scaled by 1/p_g,
/// so the expectation over shots equals the exact energy. The rotated
/// probability tables are prepared once, which makes repeated shots on the
/// same circuit cheap.
class ShotSampler {
  public:
    ShotSampler(const Circuit &c, const Hamiltonian &h);

    double sample(Rng &rng);
    double sample_mean(int n_shots, Rng &rng);

  private:
    int n_;
    std::vector<double> group_prob_cdf_;
    std::vector<double> group_inv_prob_;
    // Per group: cumulative bitstring distribution and per-term (coeff, mask).
    std::vector<std::vector<double>> bit_cdf_;
    std::vector<std::vector<std::pair<double, uint64_t>>> term_masks_;
};

/// One unbiased sample of the cost of circuit c under h.
double single_shot_sample(const Circuit &c, const Hamiltonian &h, Rng &rng);

}  // namespace qlt

#endif
