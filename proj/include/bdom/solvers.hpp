#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bdom/broadcast.hpp"
#include "bdom/graph.hpp"

namespace bdom {

enum class Invariant { gamma, Gamma, gamma_b, Gamma_b };
enum class Method { exact, closed_form };

std::string to_string(Invariant inv);
std::string to_string(Method m);
/// Accepts the canonical names "gamma", "Gamma", "gamma_b", "Gamma_b".
Invariant invariant_from_string(std::string_view s);

inline constexpr std::uint64_t kDefaultNodeBudget = 4'000'000'000ULL;

/// Caps for the exhaustive searches. Exceeding either raises CapabilityError.
struct SolverLimits {
    int max_vertices = 25;
    std::uint64_t node_budget = kDefaultNodeBudget;
};

struct InvariantReport {
    Invariant invariant = Invariant::gamma;
    int value = 0;
    std::variant<VertexSet, Broadcast> witness;
    Method method = Method::exact;
    std::uint64_t nodes = 0;
};

// Exact solvers. All need a connected graph. Witnesses are the
// lexicographically smallest optimal ones: characteristic vectors for sets,
// strength vectors for broadcasts, vertex 0 most significant.

InvariantReport solve_gamma(const Graph& g, const SolverLimits& limits = {});
InvariantReport solve_upper_gamma(const Graph& g, const SolverLimits& limits = {});
/// K_1 admits no dominating broadcast under f(v) <= e(v) = 0; both broadcast
/// solvers raise DomainError on it.
InvariantReport solve_gamma_b(const Graph& g, const SolverLimits& limits = {});
InvariantReport solve_upper_gamma_b(const Graph& g, const SolverLimits& limits = {});

InvariantReport solve(Invariant inv, const Graph& g, const SolverLimits& limits = {});

/// True iff some minimal dominating broadcast costs more than `threshold`.
/// Stops at the first one found, so it is much cheaper than a full
/// solve_upper_gamma_b when the answer is yes.
bool has_minimal_broadcast_above(const Graph& g, int threshold, const SolverLimits& limits = {});

/// Visits every minimal dominating broadcast of cost <= cost_bound exactly
/// once, in lexicographic order of strength vectors. Return false from the
/// visitor to stop early. Returns the number of search nodes expanded.
std::uint64_t for_each_minimal_broadcast(const Graph& g, int cost_bound,
                                         const std::function<bool(const Broadcast&)>& visit,
                                         const SolverLimits& limits = {});

std::vector<Broadcast> enumerate_minimal_broadcasts(const Graph& g, int cost_bound,
                                                    const SolverLimits& limits = {});

/// Every minimal dominating set, in lexicographic order of characteristic vectors.
std::vector<VertexSet> enumerate_minimal_dominating_sets(const Graph& g, const SolverLimits& limits = {});

/// log10 of prod_v (e(v) + 1): the size of the unpruned broadcast space.
double broadcast_space_log10(const Metrics& m);

/// {"invariant", "value", "method", "witness", "nodes"}; the witness is
/// {"set": [...]} or {"strengths": [...]}.
nlohmann::json to_json(const InvariantReport& r);

}  // namespace bdom
