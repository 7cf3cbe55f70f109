#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace bdom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted; the graph is immutable once built, so a
/// `const Graph&` can be shared freely between threads.
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph. Duplicate pairs (in either orientation) collapse
    /// to one edge. Throws InputError for out-of-range ids or self-loops.
    Graph(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edge list with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Free-function spelling of the constructor.
Graph build_graph(int n, std::span<const Edge> edges);

/// True iff every vertex is reachable from vertex 0 (the empty graph counts as connected).
bool is_connected(const Graph& g);

/// n-vertex tree check: connected with exactly n-1 edges.
bool is_tree(const Graph& g);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// All-pairs hop distances plus eccentricity data.
///
/// `dist` is always filled (kUnreachable marks pairs in different components).
/// Eccentricity, radius and diameter are only defined for connected graphs;
/// the accessors throw CapabilityError otherwise.
class Metrics {
public:
    explicit Metrics(const Graph& g);

    int order() const { return n_; }
    bool connected() const { return connected_; }

    int distance(Vertex u, Vertex v) const {
        return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    /// Row of the distance matrix for `u`.
    std::span<const int> row(Vertex u) const {
        return {dist_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
    }

    int eccentricity(Vertex v) const;
    const std::vector<int>& eccentricities() const;
    int radius() const;
    int diameter() const;

private:
    void require_connected() const;

    int n_ = 0;
    bool connected_ = true;
    std::vector<int> dist_;
    std::vector<int> ecc_;
    int radius_ = 0;
    int diameter_ = 0;
};

Metrics metrics(const Graph& g);

/// G1 □ G2 with vertex (a, b) at index a * |V(G2)| + b.
Graph cartesian_product(const Graph& g1, const Graph& g2);

}  // namespace bdom
