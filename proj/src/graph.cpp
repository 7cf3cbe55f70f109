#include "bdom/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bdom/errors.hpp"

namespace bdom {

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 0) throw InputError("negative vertex count " + std::to_string(n));
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

namespace {

void bfs_row(const Graph& g, Vertex src, std::span<int> out) {
    std::fill(out.begin(), out.end(), kUnreachable);
    std::queue<Vertex> q;
    out[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (out[static_cast<std::size_t>(w)] == kUnreachable) {
                out[static_cast<std::size_t>(w)] = out[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
        }
    }
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.empty()) return true;
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    bfs_row(g, 0, d);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

bool is_tree(const Graph& g) {
    return !g.empty() && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

Metrics::Metrics(const Graph& g) : n_(g.order()) {
    const auto n = static_cast<std::size_t>(n_);
    dist_.assign(n * n, kUnreachable);
    for (Vertex u = 0; u < n_; ++u) {
        bfs_row(g, u, {dist_.data() + static_cast<std::size_t>(u) * n, n});
    }
    connected_ = std::none_of(dist_.begin(), dist_.end(), [](int x) { return x == kUnreachable; });
    if (!connected_ || n_ == 0) return;

    ecc_.resize(n);
    for (Vertex u = 0; u < n_; ++u) {
        auto r = row(u);
        ecc_[static_cast<std::size_t>(u)] = *std::max_element(r.begin(), r.end());
    }
    radius_ = *std::min_element(ecc_.begin(), ecc_.end());
    diameter_ = *std::max_element(ecc_.begin(), ecc_.end());
}

void Metrics::require_connected() const {
    if (!connected_) throw CapabilityError("graph is disconnected; eccentricity-based metrics are undefined");
    if (n_ == 0) throw CapabilityError("empty graph has no eccentricities");
}

int Metrics::eccentricity(Vertex v) const {
    require_connected();
    return ecc_[static_cast<std::size_t>(v)];
}

const std::vector<int>& Metrics::eccentricities() const {
    require_connected();
    return ecc_;
}

int Metrics::radius() const {
    require_connected();
    return radius_;
}

int Metrics::diameter() const {
    require_connected();
    return diameter_;
}

Metrics metrics(const Graph& g) { return Metrics(g); }

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    if (g1.empty() || g2.empty()) throw InputError("cartesian product needs two nonempty factors");
    const int n1 = g1.order();
    const int n2 = g2.order();
    auto id = [n2](Vertex a, Vertex b) { return a * n2 + b; };

    std::vector<Edge> edges;
    edges.reserve(g1.size() * static_cast<std::size_t>(n2) + g2.size() * static_cast<std::size_t>(n1));
    for (Vertex a = 0; a < n1; ++a) {
        for (auto [b1, b2] : g2.edges()) edges.emplace_back(id(a, b1), id(a, b2));
    }
    for (auto [a1, a2] : g1.edges()) {
        for (Vertex b = 0; b < n2; ++b) edges.emplace_back(id(a1, b), id(a2, b));
    }
    return Graph(n1 * n2, edges);
}

}  // namespace bdom
