#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "prodham/budget.hpp"
#include "prodham/cycle.hpp"
#include "prodham/graph.hpp"

namespace prodham {

enum class OracleStatus { Found, None, Unknown };

std::string_view to_string(OracleStatus s);

struct CycleSearchResult {
    OracleStatus status = OracleStatus::Unknown;
    HamCycle cycle;  ///< layers = 1, base_order = |V(G)| when found
    std::uint64_t nodes = 0;
};

struct PathSearchResult {
    OracleStatus status = OracleStatus::Unknown;
    std::vector<Vertex> path;
    std::uint64_t nodes = 0;
};

/// Exhaustive Hamiltonian cycle search from vertex 1, neighbours in
/// ascending order. Pruning: every unvisited vertex keeps two usable
/// neighbours, edges at vertices with exactly two are forced (no vertex
/// takes three, no premature cycle), and the unvisited part stays connected
/// to the path end. Unbalanced bipartite graphs and graphs of order < 3 are
/// rejected up front. `workers` is ignored.
CycleSearchResult brute_hamiltonian(const Graph& g, const SearchBudget& budget = {});

/// Spanning path search: cycle search on G plus a universal vertex.
PathSearchResult brute_traceable(const Graph& g, const SearchBudget& budget = {});

}  // namespace prodham
