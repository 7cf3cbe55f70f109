#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bdom/graph.hpp"

namespace bdom {

/// One or two center vertices of a tree (sorted).
std::vector<Vertex> tree_centers(const Graph& tree);

/// AHU canonical string of a free tree: two trees are isomorphic iff their
/// strings are equal. Throws InputError if `tree` is not a tree.
std::string canonical_form(const Graph& tree);

/// Decodes a Prüfer sequence over 0..n-1 (n = seq.size() + 2) into a labeled tree.
Graph tree_from_prufer(std::span<const int> seq);

/// Uniform random labeled tree on n >= 1 vertices via a random Prüfer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

/// `count` random trees from one mt19937_64 seeded with `seed`; each order is
/// drawn uniformly from [min_order, max_order] before its Prüfer sequence.
std::vector<Graph> seeded_random_trees(int count, int min_order, int max_order, std::uint64_t seed);

inline constexpr int kMaxExhaustiveTreeOrder = 10;

/// Single-pass stream over one representative per isomorphism class of trees
/// with 1..max_order vertices.
///
/// Order is by vertex count, then by canonical string. Representatives are
/// relabeled in BFS order from a center so the output does not depend on which
/// labeled tree was seen first. Throws CapabilityError when max_order
/// exceeds kMaxExhaustiveTreeOrder.
class TreeEnumerator {
public:
    explicit TreeEnumerator(int max_order);

    std::optional<Graph> next();

private:
    void fill_order(int n);

    int max_order_;
    int current_order_ = 0;
    std::vector<Graph> batch_;
    std::size_t cursor_ = 0;
};

/// Drains a TreeEnumerator into a vector.
std::vector<Graph> enumerate_trees(int max_order);

}  // namespace bdom
