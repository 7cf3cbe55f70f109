#include "bdom/generators.hpp"

#include "bdom/errors.hpp"

namespace bdom {

Graph path_graph(int k) {
    if (k < 1) throw InputError("path needs at least 1 vertex, got " + std::to_string(k));
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
    return Graph(k, edges);
}

Graph cycle_graph(int k) {
    if (k < 3) throw InputError("cycle needs at least 3 vertices, got " + std::to_string(k));
    std::vector<Edge> edges;
    for (Vertex v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
    return Graph(k, edges);
}

Graph grid_graph(int m, int n) {
    if (m < 1 || n < 1) throw InputError("grid dimensions must be >= 1");
    return cartesian_product(path_graph(m), path_graph(n));
}

Graph torus_graph(int m, int n) {
    if (m < 3 || n < 3) {
        throw InputError("torus dimensions must be >= 3, got " + std::to_string(m) + "x" + std::to_string(n));
    }
    return cartesian_product(cycle_graph(m), cycle_graph(n));
}

Graph star_graph(int k) {
    if (k < 1) throw InputError("star needs at least 1 leaf, got " + std::to_string(k));
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= k; ++v) edges.emplace_back(0, v);
    return Graph(k + 1, edges);
}

char to_char(LimbKind k) {
    switch (k) {
        case LimbKind::A: return 'A';
        case LimbKind::B: return 'B';
        case LimbKind::C: return 'C';
    }
    return '?';
}

LimbKind limb_kind_from_char(char c) {
    switch (c) {
        case 'A': return LimbKind::A;
        case 'B': return LimbKind::B;
        case 'C': return LimbKind::C;
        default: throw InputError(std::string("unknown limb type '") + c + "'");
    }
}

void LobsterSpec::validate() const {
    if (path_length < 0) throw InputError("negative spine length");
    int prev = 0;
    for (const auto& limb : limbs) {
        if (limb.position <= prev || limb.position >= path_length) {
            throw InputError("limb position " + std::to_string(limb.position) +
                             " must be increasing and strictly inside (0, " + std::to_string(path_length) + ")");
        }
        prev = limb.position;
    }
}

Graph lobster_graph(const LobsterSpec& spec) {
    spec.validate();
    std::vector<Edge> edges;
    for (Vertex v = 0; v < spec.path_length; ++v) edges.emplace_back(v, v + 1);
    Vertex next = spec.path_length + 1;
    for (const auto& limb : spec.limbs) {
        const Vertex at = limb.position;
        switch (limb.kind) {
            case LimbKind::A:
                edges.emplace_back(at, next);
                edges.emplace_back(next, next + 1);
                next += 2;
                break;
            case LimbKind::B:
                edges.emplace_back(at, next);
                edges.emplace_back(at, next + 1);
                next += 2;
                break;
            case LimbKind::C:
                edges.emplace_back(at, next);
                next += 1;
                break;
        }
    }
    return Graph(next, edges);
}

}  // namespace bdom
