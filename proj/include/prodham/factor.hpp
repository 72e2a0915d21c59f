#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prodham/graph.hpp"

namespace prodham {

/// Spanning subgraph whose components are paths on 2 or 3 vertices. Each
/// component lists its vertices in path order; components are stored in the
/// order they were found (ascending smallest vertex).
struct PathFactor {
    std::vector<std::vector<Vertex>> components;

    bool is_perfect_matching() const;
    /// Edges of all component paths, sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const PathFactor&, const PathFactor&) = default;
};

/// Disjoint, covering, and every consecutive pair in a component adjacent.
/// Components must have 2 or 3 vertices.
bool is_valid_path_factor(const Graph& g, const PathFactor& f);

/// Witness S with i(G - S) > 2|S|; rules out a path factor.
struct FactorCertificate {
    std::vector<Vertex> witness;
    int isolated_count = 0;

    /// "S = {v1,...}; i(G-S) = k; 2|S| = m"
    std::string to_text() const;

    friend bool operator==(const FactorCertificate&, const FactorCertificate&) = default;
};

/// Number of vertices of G - S with no neighbour outside S.
int isolated_count(const Graph& g, std::span<const Vertex> removed);

/// Backtracking over the edges at the smallest uncovered vertex.
std::optional<PathFactor> find_perfect_matching(const Graph& g);

/// {P2,P3}-factor; exists iff any path factor exists. Trees use a rooted
/// dynamic program to steer the search, other graphs use exhaustive search.
/// At every branch P2 choices are tried before P3 choices.
std::optional<PathFactor> find_p23_factor(const Graph& g);

constexpr int kCertificateOrderCap = 24;

/// Minimum-cardinality (then lexicographically least) S with i(G-S) > 2|S|,
/// or std::nullopt when a path factor exists. Throws BudgetExceeded when
/// the order exceeds `order_cap`.
std::optional<FactorCertificate> wang_certificate(const Graph& g, int order_cap = kCertificateOrderCap);

struct Bipartition;

/// Violating S contained in a single side of `bip`. Throws HasPathFactor if
/// `h` has a path factor.
FactorCertificate bipartite_certificate(const Graph& h, const Bipartition& bip);

struct SufficientConditions {
    bool delta_third = false;       ///< 3 * min degree >= |V|
    bool dirac_type = false;        ///< 2 * min degree >= max degree, min degree >= 1
    bool cubic_bridgeless = false;  ///< connected, 3-regular, no cut-edge
};

/// Each true flag is cross-checked against the factor search (orders up to
/// kCertificateOrderCap); a contradiction throws std::logic_error.
SufficientConditions sufficient_conditions(const Graph& g);

namespace detail {

/// Plain exhaustive cover search, no tree specialisation.
std::optional<PathFactor> p23_factor_exhaustive(const Graph& g);

/// Rooted dynamic program on the forest left after deleting `removed`
/// (removed[v] != 0). `g` must be a forest.
bool forest_has_p23_factor(const Graph& g, const std::vector<char>& removed);

}  // namespace detail

}  // namespace prodham
