#pragma once

#include <utility>
#include <vector>

#include "bdom/generators.hpp"
#include "bdom/graph.hpp"
#include "oracles.hpp"

namespace fixtures {

using bdom::Graph;
using bdom::LimbKind;
using bdom::LobsterSpec;

/// Path v1-v2-v3-v4 with v5 hanging off v3 (0-based).
inline Graph small_tree() {
    std::vector<bdom::Edge> e{{0, 1}, {1, 2}, {2, 3}, {2, 4}};
    return Graph(5, e);
}

/// Diameter-12 lobster with limbs A, C, B, C.
inline LobsterSpec diam12_spec() {
    return {12, {{2, LimbKind::A}, {5, LimbKind::C}, {8, LimbKind::B}, {11, LimbKind::C}}};
}

/// Spine 0..8 with a 3-edge limb at 3, two leaves at 6 and one at 7.
inline Graph deep_limb_tree() {
    std::vector<bdom::Edge> e;
    for (int i = 0; i < 8; ++i) e.emplace_back(i, i + 1);
    e.insert(e.end(), {{3, 9}, {9, 10}, {10, 11}, {6, 12}, {6, 13}, {7, 14}});
    return Graph(15, e);
}

inline LobsterSpec three_c_spec() { return {6, {{1, LimbKind::C}, {3, LimbKind::C}, {5, LimbKind::C}}}; }

/// C_6 with a pendant leaf on two antipodal cycle vertices.
inline Graph modified_c6() {
    std::vector<bdom::Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {3, 7}};
    return Graph(8, e);
}

inline oracle::Adj to_adj(const Graph& g) {
    return oracle::adjacency(g.order(), g.edges());
}

}  // namespace fixtures
