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

#include "qlt/cover.hpp"

#include <bitset>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qlt {

namespace {

// The 17 two-qubit cover generators, written as operator products over the
// two qubit lines: factors separated by " C " (a CNOT, control on the left
// line), sides of each tensor factor separated by '|', 'D' = S-dagger.
// The rightmost factor acts first; letters within a side multiply as written
// (rightmost first).
constexpr const char *kBuiltin2qLines[17] = {
    "DX|D C SHDY|HZ C HX|HSHX",
    "HSHY|DY C HDZ|HX",
    "HSZ|SX C HZ|SHZ C X|HDY",
    "HDX|HSY",
    "HZ|SHZ C HSZ|SHDX",
    "HY|Y C DHZ|SHX",
    "DHZ|Z C Y|HSHZ",
    "SY|HZ C HX|HSX",
    "SY|DZ C Y|S",
    "DHX|HZ C DHX|DX C SX|DZ",
    "SX|DHX C HSHZ|HZ C SHY|SZ",
    "Y|HSHY C SHZ|SY C HY|HSHX",
    "HY|HSY C HDX|H C DX|SHDY",
    "HDY|HSY C SHX|HY C DY|DZ",
    "HX|HD C H|SY C HSHX|SY",
    "Z|HSHY C SHY|HX C X|DY",
    "HZ|HSX C DH|DHY C HSZ|I",
};

void emit_side(std::vector<CliffordGate> &gates, const std::string &ops, int q) {
    // letters form a matrix product; the rightmost acts first
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        switch (*it) {
            case 'I': break;
            case 'H': gates.push_back({CliffordGate::H, q}); break;
            case 'S': gates.push_back({CliffordGate::S, q}); break;
            case 'D': gates.push_back({CliffordGate::SDG, q}); break;
            case 'X': gates.push_back({CliffordGate::X, q}); break;
            case 'Y': gates.push_back({CliffordGate::Y, q}); break;
            case 'Z': gates.push_back({CliffordGate::Z, q}); break;
            default:
                throw std::logic_error("builtin cover: bad letter");
        }
    }
}

std::vector<CliffordGate> line_to_circuit(const std::string &line, int *cnot_count) {
    struct Factor {
        bool is_cnot;
        std::string left, right;
    };
    std::vector<Factor> factors;
    std::istringstream in(line);
    std::string tok;
    int cnots = 0;
    while (in >> tok) {
        if (tok == "C") {
            factors.push_back({true, "", ""});
            cnots++;
            continue;
        }
        auto bar = tok.find('|');
        factors.push_back({false, tok.substr(0, bar), tok.substr(bar + 1)});
    }
    std::vector<CliffordGate> gates;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (it->is_cnot) {
            gates.push_back({CliffordGate::CX, 0, 1});
            continue;
        }
        emit_side(gates, it->left, 0);
        emit_side(gates, it->right, 1);
    }
    if (cnot_count != nullptr) {
        *cnot_count = cnots;
    }
    return gates;
}

}  // namespace

std::set<std::pair<uint32_t, uint32_t>> group_pairs(const CliffordTableau &u0) {
    std::set<std::pair<uint32_t, uint32_t>> pairs;
    const uint32_t np = 1u << (2 * u0.k);
    for (uint32_t j = 1; j < np; j++) {
        PauliString img = tableau_conjugate(u0, PauliString::from_index(u0.k, j));
        pairs.insert({img.index(), j});
    }
    return pairs;
}

std::set<std::pair<uint32_t, uint32_t>> covered_pairs(const CliffordCover &cover) {
    std::set<std::pair<uint32_t, uint32_t>> all;
    for (const auto &g : cover.groups) {
        auto pairs = group_pairs(g);
        all.insert(pairs.begin(), pairs.end());
    }
    return all;
}

bool cover_is_complete(const CliffordCover &cover) {
    const size_t nm = (1u << (2 * cover.k)) - 1;
    return covered_pairs(cover).size() == nm * nm;
}

std::vector<std::pair<uint32_t, uint32_t>> missing_pairs(const CliffordCover &cover) {
    auto have = covered_pairs(cover);
    std::vector<std::pair<uint32_t, uint32_t>> missing;
    const uint32_t np = 1u << (2 * cover.k);
    for (uint32_t i = 1; i < np; i++) {
        for (uint32_t j = 1; j < np; j++) {
            if (!have.count({i, j})) {
                missing.push_back({i, j});
            }
        }
    }
    return missing;
}

CliffordCover greedy_cover_search(int k, int pool_size, int restarts, Rng &rng) {
    if (k < 1 || k > 2) {
        throw std::invalid_argument("greedy_cover_search: k must be 1 or 2");
    }
    if (pool_size < 1 || restarts < 1) {
        throw std::invalid_argument("greedy_cover_search: pool and restarts must be positive");
    }
    const uint32_t np = 1u << (2 * k);
    const size_t n_target = static_cast<size_t>(np - 1) * (np - 1);
    auto pair_bit = [np](uint32_t i, uint32_t j) { return i * np + j; };

    CliffordCover best;
    best.k = k;
    for (int restart = 0; restart < restarts; restart++) {
        // fresh candidate pool with precomputed pairings
        std::vector<CliffordTableau> pool(pool_size);
        std::vector<std::bitset<256>> pairing(pool_size);
        auto fill_pool = [&] {
            for (int cand = 0; cand < pool_size; cand++) {
                pool[cand] = random_clifford(k, rng);
                pairing[cand].reset();
                for (const auto &[i, j] : group_pairs(pool[cand])) {
                    pairing[cand].set(pair_bit(i, j));
                }
            }
        };
        fill_pool();

        CliffordCover cover;
        cover.k = k;
        std::bitset<256> covered;
        size_t n_covered = 0;
        while (n_covered < n_target) {
            int best_overlap = np * np + 1;
            std::vector<int> minimal;
            for (int cand = 0; cand < pool_size; cand++) {
                int overlap = static_cast<int>((pairing[cand] & covered).count());
                if (overlap < best_overlap) {
                    best_overlap = overlap;
                    minimal.clear();
                }
                if (overlap == best_overlap) {
                    minimal.push_back(cand);
                }
            }
            if (best_overlap == static_cast<int>(np - 1)) {
                // every candidate is fully redundant; resample the pool
                fill_pool();
                continue;
            }
            std::uniform_int_distribution<size_t> pick(0, minimal.size() - 1);
            int chosen = minimal[pick(rng)];
            cover.groups.push_back(pool[chosen]);
            cover.circuits.push_back("");
            cover.cnot_counts.push_back(-1);
            covered |= pairing[chosen];
            n_covered = covered.count();
        }
        if (best.groups.empty() || cover.groups.size() < best.groups.size()) {
            best.groups = cover.groups;
            best.circuits = cover.circuits;
            best.cnot_counts = cover.cnot_counts;
        }
    }
    best.provenance = "greedy(pool=" + std::to_string(pool_size) +
                      ",restarts=" + std::to_string(restarts) + ")";
    return best;
}

const CliffordCover &builtin_cover_2q() {
    static const CliffordCover cover = [] {
        CliffordCover c;
        c.k = 2;
        c.provenance = "builtin";
        for (const char *line : kBuiltin2qLines) {
            int cnots = 0;
            auto circuit = line_to_circuit(line, &cnots);
            c.groups.push_back(tableau_from_circuit(2, circuit));
            c.circuits.push_back(clifford_circuit_str(circuit));
            c.cnot_counts.push_back(cnots);
        }
        if (!cover_is_complete(c)) {
            throw std::logic_error(
                "builtin_cover_2q: golden data failed the completeness check (" +
                std::to_string(missing_pairs(c).size()) + " pairs missing)");
        }
        return c;
    }();
    return cover;
}

std::string cover_to_json(const CliffordCover &cover) {
    nlohmann::json j;
    j["k"] = cover.k;
    j["provenance"] = cover.provenance;
    nlohmann::json groups = nlohmann::json::array();
    for (size_t g = 0; g < cover.groups.size(); g++) {
        groups.push_back({{"circuit", cover.circuits[g]}, {"cnot_count", cover.cnot_counts[g]}});
    }
    j["groups"] = std::move(groups);
    char buf[32];
    snprintf(buf, sizeof buf, "%016llx",
             static_cast<unsigned long long>(cover_checksum(cover)));
    j["checksum"] = std::string(buf);
    return j.dump(2);
}

CliffordCover cover_from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CliffordCover cover;
    cover.k = j.at("k").get<int>();
    cover.provenance = j.value("provenance", "file");
    for (const auto &jg : j.at("groups")) {
        std::string circuit = jg.at("circuit").get<std::string>();
        cover.circuits.push_back(circuit);
        cover.cnot_counts.push_back(jg.value("cnot_count", -1));
        cover.groups.push_back(tableau_from_circuit(cover.k, parse_clifford_circuit(circuit)));
    }
    if (j.contains("checksum")) {
        char buf[32];
        snprintf(buf, sizeof buf, "%016llx",
                 static_cast<unsigned long long>(cover_checksum(cover)));
        if (j["checksum"].get<std::string>() != buf) {
            throw std::runtime_error("cover_from_json: checksum mismatch");
        }
    }
    if (!cover_is_complete(cover)) {
        throw std::runtime_error("cover_from_json: cover does not probe all pairs");
    }
    return cover;
}

uint64_t cover_checksum(const CliffordCover &cover) {
    uint64_t h = 0xcbf29ce484222325uLL;
    auto mix = [&h](const std::string &s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3uLL;
        }
        h ^= '\n';
        h *= 0x100000001b3uLL;
    };
    mix(std::to_string(cover.k));
    for (size_t g = 0; g < cover.groups.size(); g++) {
        mix(cover.circuits[g]);
        mix(cover.groups[g].key());
    }
    return h;
}

}  // namespace qlt
