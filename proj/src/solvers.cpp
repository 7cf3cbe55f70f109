#include "bdom/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>

#include "bdom/errors.hpp"

namespace bdom {

std::string to_string(Invariant inv) {
    switch (inv) {
        case Invariant::gamma: return "gamma";
        case Invariant::Gamma: return "Gamma";
        case Invariant::gamma_b: return "gamma_b";
        case Invariant::Gamma_b: return "Gamma_b";
    }
    return "?";
}

std::string to_string(Method m) { return m == Method::exact ? "exact" : "closed_form"; }

Invariant invariant_from_string(std::string_view s) {
    if (s == "gamma") return Invariant::gamma;
    if (s == "Gamma") return Invariant::Gamma;
    if (s == "gamma_b") return Invariant::gamma_b;
    if (s == "Gamma_b") return Invariant::Gamma_b;
    throw InputError("unknown invariant '" + std::string(s) + "' (expected gamma, Gamma, gamma_b, Gamma_b)");
}

double broadcast_space_log10(const Metrics& m) {
    double total = 0.0;
    for (int e : m.eccentricities()) total += std::log10(static_cast<double>(e) + 1.0);
    return total;
}

namespace {

using Mask = std::uint64_t;

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void require_searchable(const Graph& g, const SolverLimits& limits) {
    if (g.empty()) throw InputError("graph has no vertices");
    if (g.order() > limits.max_vertices || g.order() > 64) {
        throw CapabilityError("graph has " + std::to_string(g.order()) + " vertices; exact search is capped at " +
                              std::to_string(std::min(limits.max_vertices, 64)));
    }
    if (!is_connected(g)) throw CapabilityError("exact solvers need a connected graph");
}

// ---------------------------------------------------------------------------
// Minimal dominating sets.
//
// Depth-first over vertices 0..n-1, excluding before including, so leaves are
// reached in lexicographic order of characteristic vectors. A member whose
// closed neighborhood is entirely multiply-covered has lost every private
// neighbor; since adding vertices only increases coverage the branch is dead.

class SetSearch {
public:
    enum class Goal { enumerate, maximize, minimize };

    SetSearch(const Graph& g, const SolverLimits& limits, Goal goal)
        : n_(g.order()), all_(full_mask(n_)), budget_(limits.node_budget), goal_(goal) {
        closed_.resize(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) {
            Mask m = Mask{1} << v;
            for (Vertex w : g.neighbors(v)) m |= Mask{1} << w;
            closed_[static_cast<std::size_t>(v)] = m;
        }
        // settled_[k]: vertices whose closed neighborhood lies inside 0..k-1.
        settled_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (int k = 0; k <= n_; ++k) {
            const Mask decided = full_mask(k);
            for (Vertex v = 0; v < n_; ++v) {
                if ((closed_[static_cast<std::size_t>(v)] & ~decided) == 0) settled_[static_cast<std::size_t>(k)] |= Mask{1} << v;
            }
        }
    }

    void run() {
        if (goal_ == Goal::maximize) best_ = 0;
        if (goal_ == Goal::minimize) best_ = n_ + 1;
        dfs(0, 0, 0, 0);
    }

    std::vector<Mask> found;  // enumerate mode
    std::optional<Mask> witness;
    int best_ = 0;
    std::uint64_t nodes = 0;

private:
    void dfs(int k, Mask chosen, Mask once, Mask multi) {
        if (++nodes > budget_) {
            throw CapabilityError("dominating-set search exceeded the node budget of " + std::to_string(budget_));
        }
        const int size = std::popcount(chosen);
        if ((settled_[static_cast<std::size_t>(k)] & ~once) != 0) return;
        if (goal_ == Goal::maximize && size + (n_ - k) <= best_) return;
        if (goal_ == Goal::minimize && size + (once == all_ ? 0 : 1) >= best_) return;
        if (k == n_) {
            leaf(chosen, size);
            return;
        }
        dfs(k + 1, chosen, once, multi);

        const Mask nb = closed_[static_cast<std::size_t>(k)];
        const Mask new_multi = multi | (once & nb);
        const Mask new_chosen = chosen | (Mask{1} << k);
        for (Mask rest = new_chosen; rest != 0; rest &= rest - 1) {
            const int s = std::countr_zero(rest);
            if ((closed_[static_cast<std::size_t>(s)] & ~new_multi) == 0) return;
        }
        dfs(k + 1, new_chosen, once | nb, new_multi);
    }

    void leaf(Mask chosen, int size) {
        switch (goal_) {
            case Goal::enumerate: found.push_back(chosen); break;
            case Goal::maximize:
                if (size > best_) {
                    best_ = size;
                    witness = chosen;
                }
                break;
            case Goal::minimize:
                if (size < best_) {
                    best_ = size;
                    witness = chosen;
                }
                break;
        }
    }

    int n_;
    Mask all_;
    std::uint64_t budget_;
    Goal goal_;
    std::vector<Mask> closed_;
    std::vector<Mask> settled_;
};

VertexSet set_from_mask(int n, Mask m) { return VertexSet::from_mask(n, m); }

InvariantReport run_set_search(const Graph& g, const SolverLimits& limits, SetSearch::Goal goal, Invariant inv) {
    require_searchable(g, limits);
    SetSearch s(g, limits, goal);
    s.run();
    InvariantReport r;
    r.invariant = inv;
    r.value = s.best_;
    r.witness = set_from_mask(g.order(), *s.witness);
    r.nodes = s.nodes;
    return r;
}

// ---------------------------------------------------------------------------
// Minimal dominating broadcasts.
//
// Depth-first over vertices 0..n-1 with strengths tried in increasing order,
// so leaves arrive in lexicographic order. A broadcaster v at strength r keeps
// a ring of candidate private neighbors (distance exactly r, or the closed
// neighborhood when r = 1); once every ring vertex is heard twice the branch
// cannot be completed into a minimal broadcast.
//
// For maximization, the cost still obtainable from undecided vertices is
// bounded by assigning each of them a distinct private neighbor among the
// vertices no decided broadcaster reaches, worth at most its distance to the
// farthest undecided vertex.

class BroadcastSearch {
public:
    enum class Goal { enumerate, maximize, minimize, exists_above };

    BroadcastSearch(const Graph& g, const Metrics& m, const SolverLimits& limits, Goal goal)
        : n_(g.order()), all_(full_mask(n_)), edges_(static_cast<int>(g.size())), budget_(limits.node_budget),
          goal_(goal), metrics_(m) {
        ecc_ = m.eccentricities();
        ball_.resize(static_cast<std::size_t>(n_));
        ring_.resize(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) {
            const int e = ecc_[static_cast<std::size_t>(v)];
            auto& b = ball_[static_cast<std::size_t>(v)];
            auto& rg = ring_[static_cast<std::size_t>(v)];
            b.assign(static_cast<std::size_t>(e) + 1, 0);
            rg.assign(static_cast<std::size_t>(e) + 1, 0);
            for (Vertex u = 0; u < n_; ++u) {
                const int d = m.distance(v, u);
                for (int r = d; r <= e; ++r) b[static_cast<std::size_t>(r)] |= Mask{1} << u;
                if (d >= 1) rg[static_cast<std::size_t>(d)] |= Mask{1} << u;
            }
            if (e >= 1) rg[1] |= Mask{1} << v;
        }
        // reach_[k][p]: best strength an undecided vertex (index >= k) could
        // spend with p as its private neighbor.
        reach_.assign(static_cast<std::size_t>(n_) + 1, std::vector<int>(static_cast<std::size_t>(n_), 0));
        for (int k = n_ - 1; k >= 0; --k) {
            for (Vertex p = 0; p < n_; ++p) {
                const int via_k = std::max(1, m.distance(k, p));
                reach_[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] =
                    std::max(reach_[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(p)], via_k);
            }
        }
        strength_.assign(static_cast<std::size_t>(n_), 0);
    }

    void set_bound(int b) { bound_ = b; }
    void set_visitor(const std::function<bool(const Broadcast&)>* v) { visitor_ = v; }

    void run() {
        stop_ = false;
        dfs(0, 0, 0, 0);
    }

    std::optional<std::vector<int>> witness;
    std::uint64_t nodes = 0;
    // enumerate: max cost; maximize/exists_above: best cost so far (strict
    // improvement required); minimize: best cost so far (strictly below).
    int bound_ = 0;

private:
    int remaining_bound(int k, Mask once) const {
        const int undecided = n_ - k;
        if (undecided == 0) return 0;
        const auto& w = reach_[static_cast<std::size_t>(k)];
        int vals[64];
        int cnt = 0;
        for (Mask rest = all_ & ~once; rest != 0; rest &= rest - 1) {
            vals[cnt++] = w[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        if (cnt > undecided) {
            std::nth_element(vals, vals + undecided, vals + cnt, std::greater<>());
            cnt = undecided;
        }
        int sum = 0;
        for (int i = 0; i < cnt; ++i) sum += vals[i];
        return sum;
    }

    void dfs(int k, Mask once, Mask multi, int cost) {
        if (stop_) return;
        if (++nodes > budget_) {
            throw CapabilityError("broadcast search exceeded the node budget of " + std::to_string(budget_) +
                                  " (unpruned space ~1e" +
                                  std::to_string(static_cast<int>(std::ceil(broadcast_space_log10(metrics_)))) + ")");
        }
        if (goal_ == Goal::maximize || goal_ == Goal::exists_above) {
            if (cost + std::min(remaining_bound(k, once), edges_ - cost) <= bound_) return;
        } else if (goal_ == Goal::minimize) {
            if (cost + (once == all_ ? 0 : 1) >= bound_) return;
        }
        if (k == n_) {
            if (once == all_) leaf(cost);
            return;
        }

        strength_[static_cast<std::size_t>(k)] = 0;
        dfs(k + 1, once, multi, cost);

        const auto& balls = ball_[static_cast<std::size_t>(k)];
        const auto& rings = ring_[static_cast<std::size_t>(k)];
        for (int r = 1; r <= ecc_[static_cast<std::size_t>(k)] && !stop_; ++r) {
            const int new_cost = cost + r;
            if (goal_ == Goal::enumerate && new_cost > bound_) break;
            if (goal_ == Goal::minimize && new_cost >= bound_) break;
            const Mask b = balls[static_cast<std::size_t>(r)];
            const Mask new_multi = multi | (once & b);
            // Larger r only adds coverage, so a broadcaster killed here stays dead.
            bool other_dead = false;
            for (const auto& [u, ring] : active_) {
                if ((ring & ~new_multi) == 0) {
                    other_dead = true;
                    break;
                }
            }
            if (other_dead) break;
            const Mask own = rings[static_cast<std::size_t>(r)];
            if ((own & ~new_multi) == 0) continue;

            strength_[static_cast<std::size_t>(k)] = r;
            active_.emplace_back(k, own);
            dfs(k + 1, once | b, new_multi, new_cost);
            active_.pop_back();
        }
        strength_[static_cast<std::size_t>(k)] = 0;
    }

    void leaf(int cost) {
        switch (goal_) {
            case Goal::enumerate:
                if (!(*visitor_)(Broadcast(strength_))) stop_ = true;
                break;
            case Goal::maximize:
                if (cost > bound_) {
                    bound_ = cost;
                    witness = strength_;
                }
                break;
            case Goal::exists_above:
                if (cost > bound_) {
                    witness = strength_;
                    stop_ = true;
                }
                break;
            case Goal::minimize:
                if (cost < bound_) {
                    bound_ = cost;
                    witness = strength_;
                }
                break;
        }
    }

    int n_;
    Mask all_;
    int edges_;
    std::uint64_t budget_;
    Goal goal_;
    const Metrics& metrics_;
    std::vector<int> ecc_;
    std::vector<std::vector<Mask>> ball_;
    std::vector<std::vector<Mask>> ring_;
    std::vector<std::vector<int>> reach_;
    std::vector<int> strength_;
    std::vector<std::pair<Vertex, Mask>> active_;
    const std::function<bool(const Broadcast&)>* visitor_ = nullptr;
    bool stop_ = false;
};

void require_broadcastable(const Graph& g) {
    if (g.order() == 1) {
        throw DomainError("K_1 has no dominating broadcast: its only vertex has eccentricity 0");
    }
}

}  // namespace

InvariantReport solve_gamma(const Graph& g, const SolverLimits& limits) {
    return run_set_search(g, limits, SetSearch::Goal::minimize, Invariant::gamma);
}

InvariantReport solve_upper_gamma(const Graph& g, const SolverLimits& limits) {
    return run_set_search(g, limits, SetSearch::Goal::maximize, Invariant::Gamma);
}

std::vector<VertexSet> enumerate_minimal_dominating_sets(const Graph& g, const SolverLimits& limits) {
    require_searchable(g, limits);
    SetSearch s(g, limits, SetSearch::Goal::enumerate);
    s.run();
    std::vector<VertexSet> out;
    out.reserve(s.found.size());
    for (Mask m : s.found) out.push_back(set_from_mask(g.order(), m));
    return out;
}

InvariantReport solve_gamma_b(const Graph& g, const SolverLimits& limits) {
    require_searchable(g, limits);
    require_broadcastable(g);
    const Metrics m(g);
    BroadcastSearch s(g, m, limits, BroadcastSearch::Goal::minimize);
    // A radius-strength broadcast from a central vertex always dominates.
    s.set_bound(m.radius() + 1);
    s.run();
    InvariantReport r;
    r.invariant = Invariant::gamma_b;
    r.value = s.bound_;
    r.witness = Broadcast(*s.witness);
    r.nodes = s.nodes;
    return r;
}

InvariantReport solve_upper_gamma_b(const Graph& g, const SolverLimits& limits) {
    require_searchable(g, limits);
    require_broadcastable(g);
    const Metrics m(g);
    BroadcastSearch s(g, m, limits, BroadcastSearch::Goal::maximize);
    // A peripheral vertex at full strength is minimal with cost diam, so the
    // optimum is at least diam; search for anything from diam up.
    s.set_bound(m.diameter() - 1);
    s.run();
    InvariantReport r;
    r.invariant = Invariant::Gamma_b;
    r.value = s.bound_;
    r.witness = Broadcast(*s.witness);
    r.nodes = s.nodes;
    return r;
}

bool has_minimal_broadcast_above(const Graph& g, int threshold, const SolverLimits& limits) {
    require_searchable(g, limits);
    require_broadcastable(g);
    const Metrics m(g);
    BroadcastSearch s(g, m, limits, BroadcastSearch::Goal::exists_above);
    s.set_bound(threshold);
    s.run();
    return s.witness.has_value();
}

InvariantReport solve(Invariant inv, const Graph& g, const SolverLimits& limits) {
    switch (inv) {
        case Invariant::gamma: return solve_gamma(g, limits);
        case Invariant::Gamma: return solve_upper_gamma(g, limits);
        case Invariant::gamma_b: return solve_gamma_b(g, limits);
        case Invariant::Gamma_b: return solve_upper_gamma_b(g, limits);
    }
    throw InputError("unknown invariant");
}

std::uint64_t for_each_minimal_broadcast(const Graph& g, int cost_bound,
                                         const std::function<bool(const Broadcast&)>& visit,
                                         const SolverLimits& limits) {
    require_searchable(g, limits);
    require_broadcastable(g);
    const Metrics m(g);
    BroadcastSearch s(g, m, limits, BroadcastSearch::Goal::enumerate);
    s.set_bound(cost_bound);
    s.set_visitor(&visit);
    s.run();
    return s.nodes;
}

std::vector<Broadcast> enumerate_minimal_broadcasts(const Graph& g, int cost_bound, const SolverLimits& limits) {
    std::vector<Broadcast> out;
    for_each_minimal_broadcast(
        g, cost_bound,
        [&](const Broadcast& f) {
            out.push_back(f);
            return true;
        },
        limits);
    return out;
}

nlohmann::json to_json(const InvariantReport& r) {
    nlohmann::json witness;
    if (const auto* s = std::get_if<VertexSet>(&r.witness)) {
        witness = {{"set", to_json(*s)}};
    } else {
        witness = to_json(std::get<Broadcast>(r.witness));
    }
    return {{"invariant", to_string(r.invariant)},
            {"value", r.value},
            {"method", to_string(r.method)},
            {"witness", std::move(witness)},
            {"nodes", r.nodes}};
}

}  // namespace bdom
