#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace prodham {

/// Vertices are labelled 1..order.
using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on 1..order. Immutable after construction;
/// neighbor lists are kept in ascending order so every traversal built on
/// top of it is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    /// Throws Error(Malformed) on loops, duplicates or out-of-range endpoints.
    Graph(int order, std::span<const Edge> edges);
    Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    /// K_{1,leaves} with the center labelled 1.
    static Graph star(int leaves);
    static Graph complete_bipartite(int a, int b);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v - 1]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v - 1].size()); }
    bool adjacent(Vertex a, Vertex b) const;
    bool contains(Vertex v) const noexcept { return v >= 1 && v <= order(); }

    /// Sorted edge list.
    std::vector<Edge> edges() const;

    Graph with_edge(Edge e) const;
    /// Subgraph induced on `keep`, relabelled 1..|keep| in ascending order.
    Graph induced(std::span<const Vertex> keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
    std::vector<int> degrees;  ///< degrees[v - 1]
};

DegreeStats degree_stats(const Graph& g);
int max_degree(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
bool has_bridge(const Graph& g);

/// Proper 2-colouring. Within each component the smallest vertex is on side A.
struct Bipartition {
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;
    std::vector<std::uint8_t> color;  ///< color[v - 1]: 0 = side A, 1 = side B

    bool on_side_a(Vertex v) const { return color[v - 1] == 0; }
    bool balanced() const { return side_a.size() == side_b.size(); }
};

/// std::nullopt when the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// Spanning tree of `g` containing every edge of `seed`. Seed components are
/// joined by scanning the remaining edges of `g` in lexicographic order.
/// Throws CyclicSeed, NotSubgraph or Disconnected.
Graph spanning_tree_containing(const Graph& g, std::span<const Edge> seed);

}  // namespace prodham
