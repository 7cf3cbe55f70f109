#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bdom/generators.hpp"
#include "bdom/graph.hpp"
#include "bdom/solvers.hpp"

namespace bdom {

/// A tree seen as a spine (a fixed diametrical path v_0..v_d) with typed limbs.
struct LimbDecomposition {
    std::vector<Vertex> spine;
    std::vector<Limb> limbs;                       ///< Sorted by position.
    std::vector<std::vector<Vertex>> limb_vertices;  ///< Off-spine vertices of each limb, parallel to `limbs`.

    int diameter() const { return static_cast<int>(spine.size()) - 1; }
    /// The lobster this decomposition describes; lobster_graph(spec()) is
    /// isomorphic to the decomposed tree.
    LobsterSpec spec() const { return {diameter(), limbs}; }
};

enum class ViolationKind {
    NotTree,
    SingleVertex,
    LimbTooDeep,
    IllegalLimbShape,
    TooManyLimbs,
    SpacingViolation,
    ParityCertificate,
};

std::string to_string(ViolationKind k);

/// Why a tree failed to be recognized as diametrical. Only the fields that
/// belong to `kind` are meaningful.
struct Violation {
    ViolationKind kind = ViolationKind::NotTree;
    int position = -1;   ///< Spine index (limb checks, spacing).
    std::string pair;    ///< Spacing: "A-C", "e-B", "C-e", ...
    int required = 0;    ///< Spacing: minimum distance. TooManyLimbs: diameter.
    int actual = 0;      ///< Spacing: observed distance. TooManyLimbs: limb count.
    Vertex root = -1;    ///< ParityCertificate.
    int count = 0;       ///< ParityCertificate.
    std::string detail;
};

struct Verdict {
    bool diametrical = false;
    std::optional<LimbDecomposition> witness;
    std::optional<Violation> reason;
};

/// For every unordered pair at distance diam(t), the connecting path, oriented
/// from the smaller endpoint id; pairs in lexicographic order. The
/// single-vertex tree yields the trivial path {0}. Throws InputError on non-trees.
std::vector<std::vector<Vertex>> diametrical_paths(const Graph& t);

/// Splits `t` into limbs along `path`. Throws InputError if `path` is not a
/// diametrical path of `t`.
std::variant<LimbDecomposition, Violation> decompose(const Graph& t, const std::vector<Vertex>& path);

/// Minimum spine distance between consecutive limbs, by kind.
int required_gap(LimbKind a, LimbKind b);
/// Minimum spine distance between a spine endpoint and a limb of kind `k`.
int required_endpoint_gap(LimbKind k);

/// Checks consecutive limbs and both endpoints against the spacing table.
/// Returns the first violation along the spine, or nothing.
std::optional<Violation> check_spacing(const LimbDecomposition& dec);

/// Structural recognizer: diametrical iff some diametrical path gives only
/// A/B/C limbs, fewer than diam/2 of them, and a legal spacing. Throws
/// InputError on non-trees.
Verdict classify_tree(const Graph& t);

struct ParityCertificateResult {
    Vertex root = -1;
    int count = 0;
};

/// Looks for a root whose odd-BFS-depth class, broadcast at strength 1, is a
/// verified minimal dominating broadcast with more than diam(g) broadcasters.
std::optional<ParityCertificateResult> parity_certificate(const Graph& g);

struct Concatenation {
    Graph tree;
    std::vector<Vertex> path;  ///< d1 followed by d2 (joint vertex once).
};

/// Glues the last vertex of d1 to the first vertex of d2. t1 keeps its ids,
/// t2's other vertices are appended in id order.
Concatenation concatenate(const Graph& t1, const std::vector<Vertex>& d1, const Graph& t2,
                          const std::vector<Vertex>& d2);

/// t1 + P + t2 where P has `path_edges` edges.
Concatenation concatenate_through_path(const Graph& t1, const std::vector<Vertex>& d1, int path_edges,
                                       const Graph& t2, const std::vector<Vertex>& d2);

/// Γ_b(g) == diam(g), decided by searching for a minimal dominating broadcast
/// that costs more than diam(g) (Γ_b >= diam always holds). K_1 has no
/// dominating broadcast and is reported as not diametrical.
bool is_diametrical_exact(const Graph& g, const SolverLimits& limits = {});

nlohmann::json to_json(const LimbDecomposition& d);
nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const Verdict& v);

}  // namespace bdom
