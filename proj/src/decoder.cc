// Copyright 2026 The mfqec Authors
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

#include "mfqec/decoder.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mfqec/blossom.h"
#include "mfqec/errors.h"

namespace mfqec {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

int64_t to_units(double w) {
    return std::llround(w * DetectorGraph::kWeightScale);
}

}  // namespace

double edge_weight(double p) {
    p = std::clamp(p, kMinEdgeProbability, kMaxEdgeProbability);
    return std::log((1 - p) / p);
}

DetectorGraph::DetectorGraph(uint32_t num_detectors, std::vector<GraphEdge> edges)
    : n_det_(num_detectors), edges_(std::move(edges)) {
    for (const auto &e : edges_) {
        if (e.u > n_det_ || e.v > n_det_ || e.u == e.v) {
            throw std::invalid_argument("graph edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                        ") has a bad endpoint");
        }
        if (!(e.weight >= 0) || !std::isfinite(e.weight)) {
            throw std::invalid_argument("graph edge weights must be finite and non-negative");
        }
    }
    compute_paths();
}

DetectorGraph DetectorGraph::build(const DetectorErrorModel &dem) {
    struct Acc {
        double p[2] = {0, 0};
    };
    std::map<std::vector<uint32_t>, Acc> by_signature;
    for (const auto &f : dem.faults) {
        if (f.detectors.size() >= 3) {
            throw ConstructionError("a fault flips " + std::to_string(f.detectors.size()) +
                                    " detectors; matching graphs allow at most 2");
        }
        if (f.detectors.empty()) {
            continue;
        }
        for (uint32_t d : f.detectors) {
            if (d >= dem.num_detectors) {
                throw std::invalid_argument("fault references detector outside the model");
            }
        }
        auto &acc = by_signature[f.detectors];
        acc.p[f.logical_flip] = xor_probability(acc.p[f.logical_flip], f.probability);
    }
    std::vector<GraphEdge> edges;
    for (const auto &[dets, acc] : by_signature) {
        double p = xor_probability(acc.p[0], acc.p[1]);
        bool flag = acc.p[1] > acc.p[0];
        uint32_t u = dets[0];
        uint32_t v = dets.size() == 2 ? dets[1] : dem.num_detectors;
        edges.push_back({u, v, edge_weight(p), flag});
    }
    return DetectorGraph(dem.num_detectors, std::move(edges));
}

DetectorGraph build_graph(const DetectorErrorModel &dem) {
    return DetectorGraph::build(dem);
}

void DetectorGraph::compute_paths() {
    const size_t n = n_det_ + 1;
    dist_.assign(n * n, kInf);
    parity_.assign(n * n, 0);
    for (size_t i = 0; i < n; i++) {
        dist_[i * n + i] = 0;
    }
    for (const auto &e : edges_) {
        int64_t w = to_units(e.weight);
        if (w < dist_[e.u * n + e.v]) {
            dist_[e.u * n + e.v] = dist_[e.v * n + e.u] = w;
            parity_[e.u * n + e.v] = parity_[e.v * n + e.u] = e.logical_flip;
        }
    }
    for (size_t k = 0; k < n; k++) {
        for (size_t i = 0; i < n; i++) {
            int64_t dik = dist_[i * n + k];
            if (dik >= kInf) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                int64_t cand = dik + dist_[k * n + j];
                if (cand < dist_[i * n + j]) {
                    dist_[i * n + j] = cand;
                    parity_[i * n + j] = parity_[i * n + k] ^ parity_[k * n + j];
                }
            }
        }
    }
}

int64_t DetectorGraph::distance(uint32_t a, uint32_t b) const {
    size_t n = n_det_ + 1;
    if (a >= n || b >= n) {
        throw std::invalid_argument("distance: node out of range");
    }
    int64_t d = dist_[a * n + b];
    return d >= kInf ? -1 : d;
}

bool DetectorGraph::path_parity(uint32_t a, uint32_t b) const {
    size_t n = n_det_ + 1;
    if (a >= n || b >= n) {
        throw std::invalid_argument("path_parity: node out of range");
    }
    return parity_[a * n + b];
}

DecodeOutcome DetectorGraph::decode(std::span<const uint8_t> detectors) const {
    if (detectors.size() != n_det_) {
        throw std::invalid_argument("decode: expected " + std::to_string(n_det_) + " detector bits, got " +
                                    std::to_string(detectors.size()));
    }
    DecodeOutcome out;
    std::vector<uint32_t> flipped;
    for (uint32_t i = 0; i < n_det_; i++) {
        if (detectors[i]) {
            flipped.push_back(i);
        }
    }
    if (flipped.empty()) {
        return out;
    }
    const size_t n = n_det_ + 1;
    const uint32_t b = n_det_;
    const int k = int(flipped.size());
    const bool odd = k % 2 == 1;
    const int n_nodes = k + (odd ? 1 : 0);

    struct PairCost {
        int64_t cost;
        bool via_boundary;
    };
    std::vector<WeightedEdge> edges;
    std::vector<PairCost> costs;
    int64_t max_cost = 0;
    for (int i = 0; i < k; i++) {
        for (int j = i + 1; j < k; j++) {
            int64_t direct = dist_[flipped[i] * n + flipped[j]];
            int64_t bi = dist_[flipped[i] * n + b];
            int64_t bj = dist_[flipped[j] * n + b];
            int64_t split = (bi >= kInf || bj >= kInf) ? kInf : bi + bj;
            PairCost pc = direct <= split ? PairCost{direct, false} : PairCost{split, true};
            if (pc.cost >= kInf) {
                continue;
            }
            edges.push_back({i, j, pc.cost});
            costs.push_back(pc);
            max_cost = std::max(max_cost, pc.cost);
        }
        if (odd) {
            int64_t bi = dist_[flipped[i] * n + b];
            if (bi < kInf) {
                edges.push_back({i, k, bi});
                costs.push_back({bi, true});
                max_cost = std::max(max_cost, bi);
            }
        }
    }
    // Minimum-weight perfect matching as a maximum-cardinality
    // maximum-weight matching on complemented weights.
    for (auto &e : edges) {
        e.weight = max_cost + 1 - e.weight;
    }
    std::vector<int> mate = max_weight_matching(n_nodes, edges, true);

    bool flip = false;
    for (size_t e = 0; e < edges.size(); e++) {
        int i = edges[e].u;
        int j = edges[e].v;
        if (mate[i] != j) {
            continue;
        }
        const PairCost &pc = costs[e];
        out.total_weight += pc.cost;
        if (j == k) {
            out.matched_edges.push_back({flipped[i], b});
            flip ^= parity_[flipped[i] * n + b];
        } else if (!pc.via_boundary) {
            out.matched_edges.push_back({flipped[i], flipped[j]});
            flip ^= parity_[flipped[i] * n + flipped[j]];
        } else {
            out.matched_edges.push_back({flipped[i], b});
            out.matched_edges.push_back({flipped[j], b});
            flip ^= parity_[flipped[i] * n + b] ^ parity_[flipped[j] * n + b];
        }
    }
    out.predicted_logical_flip = flip;
    return out;
}

std::string DetectorGraph::serialize() const {
    std::ostringstream out;
    out << "# detectors " << n_det_ << '\n';
    char buf[64];
    for (const auto &e : edges_) {
        auto res = std::to_chars(buf, buf + sizeof(buf), e.weight);
        out << e.u << ' ' << e.v << ' ' << std::string_view(buf, res.ptr - buf) << ' ' << (e.logical_flip ? 1 : 0)
            << '\n';
    }
    return out.str();
}

DetectorGraph DetectorGraph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long long n_det = -1;
    std::vector<GraphEdge> edges;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::istringstream h(line.substr(1));
            std::string word;
            long long v;
            if (h >> word && word == "detectors" && h >> v) {
                n_det = v;
            }
            continue;
        }
        std::istringstream fields(line);
        long long u, v;
        double w;
        int flag;
        std::string extra;
        if (!(fields >> u >> v >> w >> flag) || (fields >> extra) || u < 0 || v < 0 || (flag != 0 && flag != 1)) {
            throw std::invalid_argument("graph line " + std::to_string(line_no) + ": expected 'u v weight flag'");
        }
        edges.push_back({uint32_t(u), uint32_t(v), w, flag == 1});
    }
    if (n_det < 0) {
        throw std::invalid_argument("graph text lacks a '# detectors N' header");
    }
    return DetectorGraph(uint32_t(n_det), std::move(edges));
}

MlDecoder::MlDecoder(const DetectorErrorModel &dem) : n_det_(dem.num_detectors) {
    if (n_det_ > kMaxDetectors) {
        throw CapacityError("exact ML decoding supports at most " + std::to_string(kMaxDetectors) +
                            " detectors, model has " + std::to_string(n_det_));
    }
    size_t size = size_t(1) << (n_det_ + 1);
    table_.assign(size, 0.0);
    table_[0] = 1.0;
    for (const auto &f : dem.faults) {
        size_t mask = 0;
        for (uint32_t d : f.detectors) {
            if (d >= n_det_) {
                throw std::invalid_argument("fault references detector outside the model");
            }
            mask ^= size_t(1) << d;
        }
        if (f.logical_flip) {
            mask ^= size_t(1) << n_det_;
        }
        if (mask == 0) {
            continue;
        }
        double p = f.probability;
        for (size_t s = 0; s < size; s++) {
            size_t t = s ^ mask;
            if (s < t) {
                double a = table_[s];
                double c = table_[t];
                table_[s] = (1 - p) * a + p * c;
                table_[t] = (1 - p) * c + p * a;
            }
        }
    }
}

double MlDecoder::joint_probability(std::span<const uint8_t> detectors, bool logical) const {
    if (detectors.size() != n_det_) {
        throw std::invalid_argument("ML decode: detector count mismatch");
    }
    size_t s = 0;
    for (uint32_t i = 0; i < n_det_; i++) {
        if (detectors[i]) {
            s |= size_t(1) << i;
        }
    }
    if (logical) {
        s |= size_t(1) << n_det_;
    }
    return table_[s];
}

bool MlDecoder::decode(std::span<const uint8_t> detectors) const {
    return joint_probability(detectors, true) > joint_probability(detectors, false);
}

bool decode_ml_bruteforce(const DetectorErrorModel &dem, std::span<const uint8_t> detectors) {
    return MlDecoder(dem).decode(detectors);
}

}  // namespace mfqec
