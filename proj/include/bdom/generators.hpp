#pragma once

#include <string>
#include <vector>

#include "bdom/graph.hpp"

namespace bdom {

// Family generators. Grid and torus vertices are labeled row-major:
// row i, column j (both 0-based) is vertex i * n + j, so the 1-based
// v_{i,j} of the usual lattice drawing maps to (i-1) * n + (j-1).

Graph path_graph(int k);         ///< P_k, k >= 1 vertices.
Graph cycle_graph(int k);        ///< C_k, k >= 3.
Graph grid_graph(int m, int n);  ///< P_m □ P_n, m, n >= 1.
Graph torus_graph(int m, int n); ///< C_m □ C_n, m, n >= 3.
Graph star_graph(int k);         ///< K_{1,k}: center 0 and leaves 1..k, k >= 1.

/// Shape of a subtree hanging off a spine vertex.
///   A: pendant path with two edges
///   B: two leaves
///   C: one leaf
enum class LimbKind { A, B, C };

char to_char(LimbKind k);
LimbKind limb_kind_from_char(char c);  ///< Throws InputError on anything but A/B/C.

struct Limb {
    int position = 0;  ///< Spine index of the attachment vertex.
    LimbKind kind = LimbKind::C;

    friend bool operator==(const Limb&, const Limb&) = default;
};

/// A lobster described by its spine length and the limbs hanging off it.
struct LobsterSpec {
    int path_length = 0;  ///< Edges on the spine; spine vertices are 0..path_length.
    std::vector<Limb> limbs;

    /// Positions strictly increasing and strictly inside (0, path_length).
    /// Throws InputError otherwise.
    void validate() const;

    friend bool operator==(const LobsterSpec&, const LobsterSpec&) = default;
};

/// Spine vertices get ids 0..d; limb vertices follow in limb order
/// (for A the vertex adjacent to the spine comes first).
Graph lobster_graph(const LobsterSpec& spec);

}  // namespace bdom
