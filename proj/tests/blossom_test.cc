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

#include "mfqec/blossom.h"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace mfqec;

namespace {

struct Best {
    int64_t weight = -1;
    int cardinality = -1;
};

/// Exhaustive search over matchings. With max_cardinality the comparison is
/// lexicographic on (cardinality, weight).
void search(int v, int n, std::vector<int> &mate, const std::map<std::pair<int, int>, int64_t> &w, int64_t acc,
            int card, bool max_card, Best &best) {
    while (v < n && mate[v] != -1) {
        v++;
    }
    if (v == n) {
        bool better = max_card ? (card > best.cardinality || (card == best.cardinality && acc > best.weight))
                               : acc > best.weight;
        if (better) {
            best = {acc, card};
        }
        return;
    }
    mate[v] = v;  // leave unmatched
    search(v + 1, n, mate, w, acc, card, max_card, best);
    mate[v] = -1;
    for (int u = v + 1; u < n; u++) {
        auto it = w.find({v, u});
        if (mate[u] != -1 || it == w.end()) {
            continue;
        }
        mate[v] = u;
        mate[u] = v;
        search(v + 1, n, mate, w, acc + it->second, card + 1, max_card, best);
        mate[v] = mate[u] = -1;
    }
}

}  // namespace

TEST(blossom, trivial_inputs) {
    EXPECT_EQ(max_weight_matching(3, {}, true), (std::vector<int>{-1, -1, -1}));
    EXPECT_EQ(max_weight_matching(2, {{0, 1, 5}}, false), (std::vector<int>{1, 0}));
    EXPECT_THROW(max_weight_matching(2, {{0, 2, 1}}, false), std::invalid_argument);
    EXPECT_THROW(max_weight_matching(2, {{1, 1, 1}}, false), std::invalid_argument);
}

TEST(blossom, prefers_weight_or_cardinality) {
    // Path 0-1-2-3 with a heavy middle edge.
    std::vector<WeightedEdge> e = {{0, 1, 2}, {1, 2, 5}, {2, 3, 2}};
    EXPECT_EQ(max_weight_matching(4, e, false), (std::vector<int>{-1, 2, 1, -1}));
    EXPECT_EQ(max_weight_matching(4, e, true), (std::vector<int>{1, 0, 3, 2}));
}

TEST(blossom, odd_cycle_needs_blossom) {
    // Triangle 0-1-2 with a pendant 2-3 and 0-4: optimal matching crosses the blossom.
    std::vector<WeightedEdge> e = {{0, 1, 6}, {1, 2, 6}, {0, 2, 6}, {2, 3, 5}, {0, 4, 5}};
    auto m = max_weight_matching(5, e, false);
    int64_t total = 0;
    for (const auto &x : e) {
        if (m[x.u] == x.v) {
            total += x.weight;
        }
    }
    EXPECT_EQ(total, 11);
}

TEST(blossom, matches_exhaustive_search_on_random_graphs) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 600; trial++) {
        int n = 2 + int(rng() % 9);
        double density = 0.2 + 0.8 * double(rng() % 100) / 100;
        std::vector<WeightedEdge> edges;
        std::map<std::pair<int, int>, int64_t> w;
        for (int u = 0; u < n; u++) {
            for (int v = u + 1; v < n; v++) {
                if (double(rng() % 1000) / 1000 < density) {
                    int64_t wt = 1 + int64_t(rng() % 20);
                    edges.push_back({u, v, wt});
                    w[{u, v}] = wt;
                }
            }
        }
        for (bool max_card : {false, true}) {
            auto mate = max_weight_matching(n, edges, max_card);
            ASSERT_EQ(mate.size(), size_t(n));
            int64_t total = 0;
            int card = 0;
            for (int v = 0; v < n; v++) {
                if (mate[v] >= 0) {
                    ASSERT_EQ(mate[mate[v]], v);
                    if (v < mate[v]) {
                        ASSERT_TRUE(w.count({v, mate[v]}));
                        total += w[{v, mate[v]}];
                        card++;
                    }
                }
            }
            std::vector<int> scratch(n, -1);
            Best best;
            search(0, n, scratch, w, 0, 0, max_card, best);
            EXPECT_EQ(total, best.weight) << "trial " << trial << " max_card " << max_card;
            if (max_card) {
                EXPECT_EQ(card, best.cardinality);
            }
        }
    }
}
