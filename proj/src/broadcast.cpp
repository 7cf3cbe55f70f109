#include "bdom/broadcast.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bdom/errors.hpp"

namespace bdom {

VertexSet::VertexSet(int n, std::initializer_list<Vertex> members) : VertexSet(n) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_mask(int n, std::uint64_t mask) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) s.insert(v);
    }
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || v >= universe()) throw InputError("vertex " + std::to_string(v) + " outside the set universe");
    bits_[static_cast<std::size_t>(v)] = true;
}

int VertexSet::count() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < universe(); ++v) {
        if (contains(v)) out.push_back(v);
    }
    return out;
}

Broadcast::Broadcast(std::vector<int> strengths) : strength_(std::move(strengths)) {
    for (int s : strength_) {
        if (s < 0) throw InputError("broadcast strengths must be non-negative");
    }
}

Broadcast Broadcast::from_set(const VertexSet& s) {
    Broadcast f(s.universe());
    for (Vertex v : s.members()) f.set(v, 1);
    return f;
}

void Broadcast::set(Vertex v, int strength) {
    if (strength < 0) throw InputError("broadcast strengths must be non-negative");
    strength_[static_cast<std::size_t>(v)] = strength;
}

std::vector<Vertex> Broadcast::broadcasters() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v) {
        if ((*this)[v] > 0) out.push_back(v);
    }
    return out;
}

int Broadcast::cost() const { return std::accumulate(strength_.begin(), strength_.end(), 0); }

void check_broadcast(const Metrics& m, const Broadcast& f) {
    if (f.size() != m.order()) {
        throw InputError("broadcast has " + std::to_string(f.size()) + " entries for a graph on " +
                         std::to_string(m.order()) + " vertices");
    }
    for (Vertex v = 0; v < f.size(); ++v) {
        if (f[v] > m.eccentricity(v)) {
            throw InputError("f(" + std::to_string(v) + ") = " + std::to_string(f[v]) + " exceeds eccentricity " +
                             std::to_string(m.eccentricity(v)));
        }
    }
}

namespace {

void require_sized(const Metrics& m, const Broadcast& f) {
    if (f.size() != m.order()) throw InputError("broadcast size does not match graph order");
}

bool hears(const Metrics& m, const Broadcast& f, Vertex u, Vertex v) {
    return f[u] > 0 && m.distance(u, v) <= f[u];
}

int hearer_count(const Metrics& m, const Broadcast& f, Vertex v, int stop_at) {
    int c = 0;
    for (Vertex u = 0; u < f.size() && c < stop_at; ++u) {
        if (hears(m, f, u, v)) ++c;
    }
    return c;
}

bool dominates_unchecked(const Metrics& m, const Broadcast& f) {
    for (Vertex v = 0; v < m.order(); ++v) {
        if (hearer_count(m, f, v, 1) == 0) return false;
    }
    return true;
}

}  // namespace

VertexSet hearers(const Metrics& m, const Broadcast& f, Vertex v) {
    require_sized(m, f);
    VertexSet h(m.order());
    for (Vertex u = 0; u < f.size(); ++u) {
        if (hears(m, f, u, v)) h.insert(u);
    }
    return h;
}

VertexSet broadcast_neighborhood(const Metrics& m, const Broadcast& f, Vertex v) {
    require_sized(m, f);
    if (f[v] == 0) throw InputError("vertex " + std::to_string(v) + " is not broadcasting");
    VertexSet s(m.order());
    for (Vertex u = 0; u < m.order(); ++u) {
        if (m.distance(u, v) <= f[v]) s.insert(u);
    }
    return s;
}

bool is_dominating(const Metrics& m, const Broadcast& f) {
    if (!m.connected()) throw CapabilityError("domination of broadcasts is only defined on connected graphs");
    require_sized(m, f);
    return dominates_unchecked(m, f);
}

VertexSet private_neighbors(const Metrics& m, const Broadcast& f, Vertex v) {
    require_sized(m, f);
    if (f[v] == 0) throw InputError("vertex " + std::to_string(v) + " is not broadcasting");
    VertexSet out(m.order());
    for (Vertex u = 0; u < m.order(); ++u) {
        if (hears(m, f, v, u) && hearer_count(m, f, u, 2) == 1) out.insert(u);
    }
    return out;
}

bool is_minimal_dominating_broadcast(const Metrics& m, const Broadcast& f) {
    if (!is_dominating(m, f)) return false;
    Broadcast lowered = f;
    for (Vertex v : f.broadcasters()) {
        lowered.set(v, f[v] - 1);
        const bool still = dominates_unchecked(m, lowered);
        lowered.set(v, f[v]);
        if (still) return false;
    }
    return true;
}

bool is_minimal_by_private_neighbors(const Metrics& m, const Broadcast& f) {
    if (!is_dominating(m, f)) return false;
    for (Vertex v : f.broadcasters()) {
        const VertexSet priv = private_neighbors(m, f, v);
        bool ok = f[v] == 1 && priv.contains(v);
        for (Vertex u = 0; u < m.order() && !ok; ++u) {
            ok = priv.contains(u) && m.distance(u, v) == f[v];
        }
        if (!ok) return false;
    }
    return true;
}

bool is_efficient(const Metrics& m, const Broadcast& f) {
    if (!is_dominating(m, f)) throw InputError("efficiency is only defined for dominating broadcasts");
    for (Vertex v = 0; v < m.order(); ++v) {
        if (hearer_count(m, f, v, 2) != 1) return false;
    }
    return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
    for (Vertex v = 0; v < g.order(); ++v) {
        bool covered = s.contains(v);
        for (Vertex w : g.neighbors(v)) covered = covered || s.contains(w);
        if (!covered) return false;
    }
    return true;
}

bool is_minimal_dominating_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw InputError("vertex set size does not match graph order");
    if (!is_dominating_set(g, s)) return false;
    auto closed_hits = [&](Vertex w) {
        int c = s.contains(w) ? 1 : 0;
        for (Vertex x : g.neighbors(w)) c += s.contains(x) ? 1 : 0;
        return c;
    };
    for (Vertex v : s.members()) {
        bool has_private = closed_hits(v) == 1;
        for (Vertex w : g.neighbors(v)) has_private = has_private || closed_hits(w) == 1;
        if (!has_private) return false;
    }
    return true;
}

bool is_dominating(const Graph& g, const Broadcast& f) { return is_dominating(Metrics(g), f); }
bool is_minimal_dominating_broadcast(const Graph& g, const Broadcast& f) {
    return is_minimal_dominating_broadcast(Metrics(g), f);
}
bool is_efficient(const Graph& g, const Broadcast& f) { return is_efficient(Metrics(g), f); }
VertexSet hearers(const Graph& g, const Broadcast& f, Vertex v) { return hearers(Metrics(g), f, v); }
VertexSet private_neighbors(const Graph& g, const Broadcast& f, Vertex v) {
    return private_neighbors(Metrics(g), f, v);
}

nlohmann::json to_json(const Broadcast& f) { return {{"strengths", f.strengths()}}; }

Broadcast broadcast_from_json(const nlohmann::json& j) {
    try {
        return Broadcast(j.at("strengths").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("broadcast JSON: ") + e.what());
    }
}

nlohmann::json to_json(const VertexSet& s) { return s.members(); }

}  // namespace bdom
