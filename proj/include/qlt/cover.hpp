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

#ifndef QLT_COVER_H
#define QLT_COVER_H

#include <set>
#include <string>
#include <vector>

#include "qlt/tableau.hpp"

namespace qlt {

/// A set of Clifford generators U0 whose induced Pauli pairings jointly cover
/// every non-identity pair (i, j), so the groups P_m U0 probe the whole
/// measurable subspace.
struct CliffordCover {
    int k = 0;
    std::vector<CliffordTableau> groups;
    std::vector<std::string> circuits;  // generator circuits, token format
    std::vector<int> cnot_counts;
    std::string provenance;

    size_t group_count() const { return groups.size(); }
    size_t total_gates() const { return groups.size() << (2 * k); }
};

/// Non-identity pairs (i, j) with sigma_i = +-(U0 sigma_j U0^dag).
std::set<std::pair<uint32_t, uint32_t>> group_pairs(const CliffordTableau &u0);

std::set<std::pair<uint32_t, uint32_t>> covered_pairs(const CliffordCover &cover);
bool cover_is_complete(const CliffordCover &cover);
std::vector<std::pair<uint32_t, uint32_t>> missing_pairs(const CliffordCover &cover);

/// Greedy minimal-overlap cover search: per restart, repeatedly score a pool
/// of random Clifford candidates by their overlap with the already covered
/// pairs, append a uniformly chosen minimal-overlap candidate until complete,
/// and keep the smallest cover across restarts.
CliffordCover greedy_cover_search(int k, int pool_size, int restarts, Rng &rng);

/// The built-in 17-group / 272-gate 2-qubit cover (at most 2 CNOTs per
/// generator, 26 CNOTs total). Coverage of all 225 pairs is verified at load
/// time; failure throws.
const CliffordCover &builtin_cover_2q();

std::string cover_to_json(const CliffordCover &cover);
CliffordCover cover_from_json(const std::string &text);

/// FNV-1a hash of the canonical cover content, as used in the JSON files.
uint64_t cover_checksum(const CliffordCover &cover);

}  // namespace qlt

#endif
