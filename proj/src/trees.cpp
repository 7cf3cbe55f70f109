#include "bdom/trees.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "bdom/errors.hpp"

namespace bdom {

std::vector<Vertex> tree_centers(const Graph& tree) {
    if (!is_tree(tree)) throw InputError("tree_centers: input is not a tree");
    const int n = tree.order();
    if (n <= 2) {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
        return all;
    }
    // Peel leaves layer by layer.
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = tree.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex leaf : layer) {
            for (Vertex w : tree.neighbors(leaf)) {
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace {

struct Rooted {
    std::vector<Vertex> parent;
    std::vector<Vertex> order;  // BFS order from root
};

Rooted root_at(const Graph& tree, Vertex root) {
    Rooted r;
    r.parent.assign(static_cast<std::size_t>(tree.order()), -1);
    r.order.reserve(static_cast<std::size_t>(tree.order()));
    r.order.push_back(root);
    r.parent[static_cast<std::size_t>(root)] = root;
    for (std::size_t i = 0; i < r.order.size(); ++i) {
        Vertex u = r.order[i];
        for (Vertex w : tree.neighbors(u)) {
            if (r.parent[static_cast<std::size_t>(w)] == -1) {
                r.parent[static_cast<std::size_t>(w)] = u;
                r.order.push_back(w);
            }
        }
    }
    return r;
}

// AHU labels of every subtree when rooted at `root`.
std::vector<std::string> subtree_labels(const Graph& tree, Vertex root) {
    const auto n = static_cast<std::size_t>(tree.order());
    Rooted r = root_at(tree, root);
    std::vector<std::vector<std::string>> kids(n);
    std::vector<std::string> label(n);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        auto& ks = kids[v];
        std::sort(ks.begin(), ks.end());
        std::string s = "(";
        for (const auto& k : ks) s += k;
        s += ')';
        label[v] = std::move(s);
        if (*it != root) kids[static_cast<std::size_t>(r.parent[v])].push_back(label[v]);
    }
    return label;
}

}  // namespace

std::string canonical_form(const Graph& tree) {
    std::string best;
    for (Vertex c : tree_centers(tree)) {
        std::string s = subtree_labels(tree, c)[static_cast<std::size_t>(c)];
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

namespace {

// Relabels a tree in BFS order from its canonical root, visiting children in
// label order, so isomorphic inputs map to identical graphs.
Graph canonical_relabel(const Graph& tree) {
    Vertex root = -1;
    std::vector<std::string> best;
    for (Vertex c : tree_centers(tree)) {
        auto labels = subtree_labels(tree, c);
        if (root == -1 || labels[static_cast<std::size_t>(c)] < best[static_cast<std::size_t>(root)]) {
            root = c;
            best = std::move(labels);
        }
    }
    const auto n = static_cast<std::size_t>(tree.order());
    std::vector<Vertex> new_id(n, -1);
    std::vector<Vertex> queue{root};
    new_id[static_cast<std::size_t>(root)] = 0;
    Vertex next = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex u = queue[i];
        std::vector<Vertex> kids;
        for (Vertex w : tree.neighbors(u)) {
            if (new_id[static_cast<std::size_t>(w)] == -1) kids.push_back(w);
        }
        std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
            return best[static_cast<std::size_t>(a)] < best[static_cast<std::size_t>(b)];
        });
        for (Vertex w : kids) {
            new_id[static_cast<std::size_t>(w)] = next++;
            queue.push_back(w);
        }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : tree.edges()) edges.emplace_back(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)]);
    return Graph(tree.order(), edges);
}

}  // namespace

Graph tree_from_prufer(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq) {
        if (x < 0 || x >= n) throw InputError("Prüfer symbol " + std::to_string(x) + " out of range");
        ++deg[static_cast<std::size_t>(x)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--deg[static_cast<std::size_t>(x)] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw InputError("random_tree needs n >= 1");
    if (n == 1) return Graph(1, {});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& x : seq) x = pick(rng);
    return tree_from_prufer(seq);
}

std::vector<Graph> seeded_random_trees(int count, int min_order, int max_order, std::uint64_t seed) {
    if (min_order < 1 || min_order > max_order) throw InputError("random tree orders need 1 <= min <= max");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(min_order, max_order);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) out.push_back(random_tree(order(rng), rng));
    return out;
}

TreeEnumerator::TreeEnumerator(int max_order) : max_order_(max_order) {
    if (max_order > kMaxExhaustiveTreeOrder) {
        throw CapabilityError("exhaustive tree enumeration is capped at " + std::to_string(kMaxExhaustiveTreeOrder) +
                              " vertices, requested " + std::to_string(max_order));
    }
}

void TreeEnumerator::fill_order(int n) {
    cursor_ = 0;
    if (n == 1) {
        batch_.clear();
        batch_.emplace_back(1, std::span<const Edge>{});
        return;
    }
    // Every tree on n vertices is a tree on n - 1 vertices plus a leaf, so
    // extending each previous representative at every vertex reaches all classes.
    std::map<std::string, Graph> classes;
    for (const Graph& t : batch_) {
        std::vector<Edge> edges = t.edges();
        edges.emplace_back(0, n - 1);
        for (Vertex v = 0; v < n - 1; ++v) {
            edges.back() = {v, n - 1};
            Graph grown(n, edges);
            auto key = canonical_form(grown);
            if (!classes.contains(key)) classes.emplace(std::move(key), canonical_relabel(grown));
        }
    }
    batch_.clear();
    for (auto& [key, g] : classes) batch_.push_back(std::move(g));
}

std::optional<Graph> TreeEnumerator::next() {
    while (cursor_ >= batch_.size()) {
        if (current_order_ >= max_order_) return std::nullopt;
        fill_order(++current_order_);
    }
    return batch_[cursor_++];  // kept: the next order grows from this batch
}

std::vector<Graph> enumerate_trees(int max_order) {
    TreeEnumerator it(max_order);
    std::vector<Graph> out;
    while (auto t = it.next()) out.push_back(std::move(*t));
    return out;
}

}  // namespace bdom
