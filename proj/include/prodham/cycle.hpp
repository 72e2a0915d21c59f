#pragma once

#include <vector>

#include "prodham/graph.hpp"
#include "prodham/product.hpp"

namespace prodham {

/// Cyclic vertex sequence in P_n □ H (a plain graph G is treated as P_1 □ G).
struct HamCycle {
    std::vector<Vertex> vertices;
    int layers = 0;
    int base_order = 0;

    ProductLabel label(std::size_t k) const { return product_label(vertices[k], base_order); }
    /// Consecutive pairs including last -> first, sorted.
    std::vector<Edge> edges() const;
    /// Rotated to start at the smallest vertex, heading to its smaller cycle neighbour.
    HamCycle canonical() const;

    friend bool operator==(const HamCycle&, const HamCycle&) = default;
};

/// True iff `cycle` visits every vertex of `g` exactly once and every
/// consecutive pair (including the closing pair) is an edge of `g`.
bool verify_cycle(const Graph& g, const HamCycle& cycle);

/// Same contract for an open spanning path.
bool verify_path(const Graph& g, const std::vector<Vertex>& path);

}  // namespace prodham
