#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "bdom/graph.hpp"

namespace bdom {

/// Subset of 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : bits_(static_cast<std::size_t>(n), false) {}
    VertexSet(int n, std::initializer_list<Vertex> members);

    static VertexSet from_mask(int n, std::uint64_t mask);

    int universe() const { return static_cast<int>(bits_.size()); }
    bool contains(Vertex v) const { return bits_[static_cast<std::size_t>(v)]; }
    void insert(Vertex v);
    void erase(Vertex v) { bits_[static_cast<std::size_t>(v)] = false; }
    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<Vertex> members() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    /// Lexicographic on the characteristic vector, vertex 0 most significant.
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.bits_ < b.bits_; }

private:
    std::vector<bool> bits_;
};

/// Per-vertex broadcast strengths f(v) >= 0.
///
/// The type itself only enforces non-negativity; the eccentricity bound
/// f(v) <= e(v) depends on the host graph and is checked by check_broadcast.
class Broadcast {
public:
    Broadcast() = default;
    explicit Broadcast(int n) : strength_(static_cast<std::size_t>(n), 0) {}
    explicit Broadcast(std::vector<int> strengths);

    /// Strength-1 broadcast on the members of `s`.
    static Broadcast from_set(const VertexSet& s);

    int size() const { return static_cast<int>(strength_.size()); }
    int operator[](Vertex v) const { return strength_[static_cast<std::size_t>(v)]; }
    void set(Vertex v, int strength);
    const std::vector<int>& strengths() const { return strength_; }

    /// V_f^+.
    std::vector<Vertex> broadcasters() const;
    int cost() const;

    friend bool operator==(const Broadcast&, const Broadcast&) = default;
    friend bool operator<(const Broadcast& a, const Broadcast& b) { return a.strength_ < b.strength_; }

private:
    std::vector<int> strength_;
};

inline int cost(const Broadcast& f) { return f.cost(); }

/// Throws InputError if `f` has the wrong length or some f(v) > e(v).
/// The eccentricity check needs a connected graph (CapabilityError otherwise).
void check_broadcast(const Metrics& m, const Broadcast& f);

/// H(v): broadcasting vertices u with d(u, v) <= f(u).
VertexSet hearers(const Metrics& m, const Broadcast& f, Vertex v);

/// N_f[v] for a broadcaster v: vertices within distance f(v).
VertexSet broadcast_neighborhood(const Metrics& m, const Broadcast& f, Vertex v);

/// Every vertex hears some broadcaster. Throws CapabilityError on disconnected graphs.
bool is_dominating(const Metrics& m, const Broadcast& f);

/// {u : H(u) = {v}}. Throws InputError if f(v) == 0.
VertexSet private_neighbors(const Metrics& m, const Broadcast& f, Vertex v);

/// Dominating, and lowering any single broadcaster by one unit breaks domination.
bool is_minimal_dominating_broadcast(const Metrics& m, const Broadcast& f);

/// Dominating, and every broadcaster v has a private neighbor at distance
/// exactly f(v), or f(v) = 1 and v is its own private neighbor. Equivalent to
/// is_minimal_dominating_broadcast; kept as an independent second route.
bool is_minimal_by_private_neighbors(const Metrics& m, const Broadcast& f);

/// Every vertex hears exactly one broadcaster. Throws InputError if f does not dominate.
bool is_efficient(const Metrics& m, const Broadcast& f);

bool is_dominating_set(const Graph& g, const VertexSet& s);

/// N[S] = V and every member has a private neighbor w with N[w] ∩ S = {v}.
bool is_minimal_dominating_set(const Graph& g, const VertexSet& s);

// Graph-taking conveniences; each computes Metrics once.
bool is_dominating(const Graph& g, const Broadcast& f);
bool is_minimal_dominating_broadcast(const Graph& g, const Broadcast& f);
bool is_efficient(const Graph& g, const Broadcast& f);
VertexSet hearers(const Graph& g, const Broadcast& f, Vertex v);
VertexSet private_neighbors(const Graph& g, const Broadcast& f, Vertex v);

/// {"strengths": [...]}
nlohmann::json to_json(const Broadcast& f);
Broadcast broadcast_from_json(const nlohmann::json& j);
/// Sorted member list.
nlohmann::json to_json(const VertexSet& s);

}  // namespace bdom
