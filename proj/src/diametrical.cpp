#include "bdom/diametrical.hpp"

#include <algorithm>

#include "bdom/broadcast.hpp"
#include "bdom/errors.hpp"

namespace bdom {

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::NotTree: return "NotTree";
        case ViolationKind::SingleVertex: return "SingleVertex";
        case ViolationKind::LimbTooDeep: return "LimbTooDeep";
        case ViolationKind::IllegalLimbShape: return "IllegalLimbShape";
        case ViolationKind::TooManyLimbs: return "TooManyLimbs";
        case ViolationKind::SpacingViolation: return "SpacingViolation";
        case ViolationKind::ParityCertificate: return "ParityCertificate";
    }
    return "?";
}

namespace {

void require_tree(const Graph& t, const char* who) {
    if (!is_tree(t)) throw InputError(std::string(who) + ": input is not a tree");
}

// Unique tree path from u to v.
std::vector<Vertex> tree_path(const Graph& t, Vertex u, Vertex v) {
    std::vector<Vertex> parent(static_cast<std::size_t>(t.order()), -1);
    std::vector<Vertex> queue{v};
    parent[static_cast<std::size_t>(v)] = v;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Vertex w : t.neighbors(queue[i])) {
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = queue[i];
                queue.push_back(w);
            }
        }
    }
    std::vector<Vertex> path{u};
    while (path.back() != v) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    return path;
}

void require_diametrical_path(const Graph& t, const Metrics& m, const std::vector<Vertex>& path) {
    if (path.empty()) throw InputError("empty path");
    std::vector<bool> seen(static_cast<std::size_t>(t.order()), false);
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Vertex v = path[i];
        if (v < 0 || v >= t.order()) throw InputError("path vertex " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v)]) throw InputError("path repeats vertex " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
        if (i > 0 && !t.adjacent(path[i - 1], v)) {
            throw InputError("path step " + std::to_string(path[i - 1]) + "-" + std::to_string(v) + " is not an edge");
        }
    }
    if (static_cast<int>(path.size()) - 1 != m.diameter()) {
        throw InputError("path has length " + std::to_string(path.size() - 1) + " but the diameter is " +
                         std::to_string(m.diameter()));
    }
}

Violation limb_violation(ViolationKind kind, int position, std::string detail) {
    Violation v;
    v.kind = kind;
    v.position = position;
    v.detail = std::move(detail);
    return v;
}

std::string kind_name(LimbKind k) { return std::string(1, to_char(k)); }

}  // namespace

std::vector<std::vector<Vertex>> diametrical_paths(const Graph& t) {
    require_tree(t, "diametrical_paths");
    if (t.order() == 1) return {{0}};
    const Metrics m(t);
    const int d = m.diameter();
    std::vector<std::vector<Vertex>> out;
    for (Vertex u = 0; u < t.order(); ++u) {
        for (Vertex v = u + 1; v < t.order(); ++v) {
            if (m.distance(u, v) == d) out.push_back(tree_path(t, u, v));
        }
    }
    return out;
}

std::variant<LimbDecomposition, Violation> decompose(const Graph& t, const std::vector<Vertex>& path) {
    require_tree(t, "decompose");
    const Metrics m(t);
    require_diametrical_path(t, m, path);

    const int d = static_cast<int>(path.size()) - 1;
    std::vector<bool> on_spine(static_cast<std::size_t>(t.order()), false);
    for (Vertex v : path) on_spine[static_cast<std::size_t>(v)] = true;

    LimbDecomposition dec;
    dec.spine = path;
    for (int i = 0; i <= d; ++i) {
        const Vertex hub = path[static_cast<std::size_t>(i)];
        std::vector<Vertex> roots;
        for (Vertex w : t.neighbors(hub)) {
            if (!on_spine[static_cast<std::size_t>(w)]) roots.push_back(w);
        }
        if (roots.empty()) continue;

        // Walk everything protruding from `hub`, recording depth below the spine.
        std::vector<Vertex> members;
        std::vector<int> depth(static_cast<std::size_t>(t.order()), -1);
        int deepest = 0;
        for (Vertex r : roots) {
            depth[static_cast<std::size_t>(r)] = 1;
            members.push_back(r);
        }
        for (std::size_t k = 0; k < members.size(); ++k) {
            const Vertex u = members[k];
            deepest = std::max(deepest, depth[static_cast<std::size_t>(u)]);
            for (Vertex w : t.neighbors(u)) {
                if (w != hub && depth[static_cast<std::size_t>(w)] == -1) {
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                    members.push_back(w);
                }
            }
        }
        if (deepest >= 3) {
            return limb_violation(ViolationKind::LimbTooDeep, i,
                                  "limb of depth " + std::to_string(deepest) + " at spine index " + std::to_string(i));
        }
        if (roots.size() >= 3) {
            return limb_violation(ViolationKind::IllegalLimbShape, i,
                                  std::to_string(roots.size()) + " protrusions at spine index " + std::to_string(i));
        }
        bool any_deep = false;
        for (Vertex r : roots) {
            const int below = t.degree(r) - 1;
            if (below >= 2) {
                return limb_violation(ViolationKind::IllegalLimbShape, i,
                                      "off-spine vertex " + std::to_string(r) + " has degree " +
                                          std::to_string(t.degree(r)));
            }
            any_deep = any_deep || below == 1;
        }
        Limb limb;
        limb.position = i;
        if (roots.size() == 2) {
            if (any_deep) {
                return limb_violation(ViolationKind::IllegalLimbShape, i,
                                      "leaf and 2-path protruding together at spine index " + std::to_string(i));
            }
            limb.kind = LimbKind::B;
        } else {
            limb.kind = any_deep ? LimbKind::A : LimbKind::C;
        }
        std::sort(members.begin(), members.end());
        if (limb.kind == LimbKind::A) {
            // Attachment vertex first, then the tip.
            if (depth[static_cast<std::size_t>(members[0])] != 1) std::swap(members[0], members[1]);
        }
        dec.limbs.push_back(limb);
        dec.limb_vertices.push_back(std::move(members));
    }
    return dec;
}

int required_gap(LimbKind a, LimbKind b) {
    if (a > b) std::swap(a, b);
    if (a == LimbKind::A) return b == LimbKind::A ? 4 : 3;
    if (a == LimbKind::B) return b == LimbKind::B ? 3 : 2;
    return 2;
}

int required_endpoint_gap(LimbKind k) { return k == LimbKind::C ? 1 : 2; }

std::optional<Violation> check_spacing(const LimbDecomposition& dec) {
    if (dec.limbs.empty()) return std::nullopt;
    auto violation = [](std::string pair, int position, int required, int actual) {
        Violation v;
        v.kind = ViolationKind::SpacingViolation;
        v.pair = std::move(pair);
        v.position = position;
        v.required = required;
        v.actual = actual;
        v.detail = v.pair + " distance " + std::to_string(actual) + " < " + std::to_string(required);
        return v;
    };
    const int d = dec.diameter();
    const Limb& first = dec.limbs.front();
    if (first.position < required_endpoint_gap(first.kind)) {
        return violation("e-" + kind_name(first.kind), first.position, required_endpoint_gap(first.kind),
                         first.position);
    }
    for (std::size_t k = 1; k < dec.limbs.size(); ++k) {
        const Limb& a = dec.limbs[k - 1];
        const Limb& b = dec.limbs[k];
        const int gap = b.position - a.position;
        if (gap < required_gap(a.kind, b.kind)) {
            return violation(kind_name(a.kind) + "-" + kind_name(b.kind), a.position, required_gap(a.kind, b.kind),
                             gap);
        }
    }
    const Limb& last = dec.limbs.back();
    if (d - last.position < required_endpoint_gap(last.kind)) {
        return violation(kind_name(last.kind) + "-e", last.position, required_endpoint_gap(last.kind),
                         d - last.position);
    }
    return std::nullopt;
}

Verdict classify_tree(const Graph& t) {
    require_tree(t, "classify_tree");
    Verdict verdict;
    if (t.order() == 1) {
        verdict.reason = limb_violation(ViolationKind::SingleVertex, -1, "a single vertex is not diametrical");
        return verdict;
    }
    for (const auto& path : diametrical_paths(t)) {
        auto result = decompose(t, path);
        std::optional<Violation> failure;
        if (auto* v = std::get_if<Violation>(&result)) {
            failure = *v;
        } else {
            auto& dec = std::get<LimbDecomposition>(result);
            const int limbs = static_cast<int>(dec.limbs.size());
            if (2 * limbs >= dec.diameter()) {
                Violation v;
                v.kind = ViolationKind::TooManyLimbs;
                v.required = dec.diameter();
                v.actual = limbs;
                v.detail = std::to_string(limbs) + " limbs is not less than half the diameter " +
                           std::to_string(dec.diameter());
                failure = v;
            } else {
                failure = check_spacing(dec);
            }
            if (!failure) {
                verdict.diametrical = true;
                verdict.witness = std::move(dec);
                verdict.reason.reset();
                return verdict;
            }
        }
        if (!verdict.reason) verdict.reason = std::move(failure);
    }
    return verdict;
}

std::optional<ParityCertificateResult> parity_certificate(const Graph& g) {
    const Metrics m(g);
    if (!m.connected()) throw CapabilityError("parity_certificate needs a connected graph");
    if (g.order() < 2) return std::nullopt;
    const int diam = m.diameter();
    for (Vertex root = 0; root < g.order(); ++root) {
        VertexSet odd(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            if (m.distance(root, v) % 2 == 1) odd.insert(v);
        }
        const int count = odd.count();
        if (count <= diam) continue;
        if (is_minimal_dominating_broadcast(m, Broadcast::from_set(odd))) return ParityCertificateResult{root, count};
    }
    return std::nullopt;
}

Concatenation concatenate(const Graph& t1, const std::vector<Vertex>& d1, const Graph& t2,
                          const std::vector<Vertex>& d2) {
    require_tree(t1, "concatenate");
    require_tree(t2, "concatenate");
    require_diametrical_path(t1, Metrics(t1), d1);
    require_diametrical_path(t2, Metrics(t2), d2);

    const int n1 = t1.order();
    const Vertex joint = d1.back();
    std::vector<Vertex> id(static_cast<std::size_t>(t2.order()), -1);
    Vertex next = n1;
    for (Vertex v = 0; v < t2.order(); ++v) {
        id[static_cast<std::size_t>(v)] = v == d2.front() ? joint : next++;
    }
    std::vector<Edge> edges = t1.edges();
    for (auto [u, v] : t2.edges()) edges.emplace_back(id[static_cast<std::size_t>(u)], id[static_cast<std::size_t>(v)]);

    Concatenation out{Graph(next, edges), d1};
    for (std::size_t i = 1; i < d2.size(); ++i) out.path.push_back(id[static_cast<std::size_t>(d2[i])]);
    return out;
}

Concatenation concatenate_through_path(const Graph& t1, const std::vector<Vertex>& d1, int path_edges,
                                       const Graph& t2, const std::vector<Vertex>& d2) {
    if (path_edges < 0) throw InputError("negative connecting path length");
    const Graph link = path_graph(path_edges + 1);
    std::vector<Vertex> link_path(static_cast<std::size_t>(path_edges) + 1);
    for (int i = 0; i <= path_edges; ++i) link_path[static_cast<std::size_t>(i)] = i;
    const Concatenation left = concatenate(t1, d1, link, link_path);
    return concatenate(left.tree, left.path, t2, d2);
}

bool is_diametrical_exact(const Graph& g, const SolverLimits& limits) {
    if (g.order() == 1) return false;
    const Metrics m(g);
    if (!m.connected()) throw CapabilityError("diametricality needs a connected graph");
    return !has_minimal_broadcast_above(g, m.diameter(), limits);
}

nlohmann::json to_json(const LimbDecomposition& d) {
    nlohmann::json limbs = nlohmann::json::array();
    for (const auto& l : d.limbs) limbs.push_back({l.position, std::string(1, to_char(l.kind))});
    return {{"spine", d.spine}, {"limbs", std::move(limbs)}};
}

nlohmann::json to_json(const Violation& v) {
    nlohmann::json j{{"kind", to_string(v.kind)}, {"detail", v.detail}};
    switch (v.kind) {
        case ViolationKind::LimbTooDeep:
        case ViolationKind::IllegalLimbShape: j["position"] = v.position; break;
        case ViolationKind::TooManyLimbs:
            j["limbs"] = v.actual;
            j["diameter"] = v.required;
            break;
        case ViolationKind::SpacingViolation:
            j["pair"] = v.pair;
            j["position"] = v.position;
            j["required"] = v.required;
            j["actual"] = v.actual;
            break;
        case ViolationKind::ParityCertificate:
            j["root"] = v.root;
            j["count"] = v.count;
            break;
        default: break;
    }
    return j;
}

nlohmann::json to_json(const Verdict& v) {
    return {{"diametrical", v.diametrical},
            {"witness", v.witness ? to_json(*v.witness) : nlohmann::json(nullptr)},
            {"reason", v.reason ? to_json(*v.reason) : nlohmann::json(nullptr)}};
}

}  // namespace bdom
