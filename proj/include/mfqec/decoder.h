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

#ifndef MFQEC_DECODER_H
#define MFQEC_DECODER_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfqec/circuit.h"

namespace mfqec {

struct GraphEdge {
    uint32_t u;
    /// A detector index, or num_detectors for the boundary.
    uint32_t v;
    double weight;
    bool logical_flip;
};

struct DecodeOutcome {
    bool predicted_logical_flip = false;
    /// Matched (detector, detector-or-boundary) pairs.
    std::vector<std::pair<uint32_t, uint32_t>> matched_edges;
    /// Sum of shortest-path lengths over the matched pairs, in integer
    /// weight units (see DetectorGraph::kWeightScale).
    int64_t total_weight = 0;
};

/// Probability clip applied before weighting.
inline constexpr double kMinEdgeProbability = 1e-12;
inline constexpr double kMaxEdgeProbability = 0.5 - 1e-12;

/// ln((1 - p) / p) with p clipped to [kMinEdgeProbability, kMaxEdgeProbability].
double edge_weight(double p);

/// Detector graph with one boundary node and precomputed all-pairs shortest
/// paths. Decoding matches flipped detectors exactly (blossom algorithm on
/// the complete graph of shortest-path distances).
///
/// Ties: shortest paths keep the first path found by Floyd-Warshall in node
/// order, and equal-weight matchings resolve by the matcher's input order
/// (pairs listed in increasing detector order). Results are reproducible.
class DetectorGraph {
  public:
    /// Real weights are rounded to multiples of 1 / kWeightScale.
    static constexpr double kWeightScale = 1 << 20;

    DetectorGraph() = default;
    DetectorGraph(uint32_t num_detectors, std::vector<GraphEdge> edges);

    /// Faults with the same detector set merge as independent events. When
    /// merged faults disagree on the logical flag, the more likely flag wins.
    /// Faults with no detectors are skipped. Throws ConstructionError if a
    /// fault flips three or more detectors.
    static DetectorGraph build(const DetectorErrorModel &dem);

    /// Text form: a "# detectors N" header, then one "u v weight flag" line
    /// per edge, where node N is the boundary. '#' lines are comments.
    std::string serialize() const;
    static DetectorGraph parse(std::string_view text);

    uint32_t num_detectors() const {
        return n_det_;
    }
    uint32_t boundary() const {
        return n_det_;
    }
    const std::vector<GraphEdge> &edges() const {
        return edges_;
    }

    /// Shortest-path distance in integer units, or -1 if unreachable.
    int64_t distance(uint32_t a, uint32_t b) const;
    bool path_parity(uint32_t a, uint32_t b) const;

    DecodeOutcome decode(std::span<const uint8_t> detectors) const;

  private:
    void compute_paths();

    uint32_t n_det_ = 0;
    std::vector<GraphEdge> edges_;
    std::vector<int64_t> dist_;
    std::vector<uint8_t> parity_;
};

DetectorGraph build_graph(const DetectorErrorModel &dem);

/// Exact maximum-likelihood decoding by summing the probability of every
/// fault subset: a table over (syndrome, logical) built once per model.
class MlDecoder {
  public:
    /// Throws CapacityError when the model has more than kMaxDetectors
    /// detectors.
    static constexpr uint32_t kMaxDetectors = 20;

    explicit MlDecoder(const DetectorErrorModel &dem);

    bool decode(std::span<const uint8_t> detectors) const;
    /// Joint probability of the syndrome and the given logical value.
    double joint_probability(std::span<const uint8_t> detectors, bool logical) const;

  private:
    uint32_t n_det_;
    std::vector<double> table_;
};

bool decode_ml_bruteforce(const DetectorErrorModel &dem, std::span<const uint8_t> detectors);

}  // namespace mfqec

#endif
