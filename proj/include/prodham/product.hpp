#pragma once

#include <string>

#include "prodham/graph.hpp"

namespace prodham {

/// Vertex i_v of G1 □ H: layer i is the first coordinate, base v the second.
struct ProductLabel {
    int layer = 0;
    Vertex base = 0;

    friend auto operator<=>(const ProductLabel&, const ProductLabel&) = default;
};

/// Fixed encoding id(i, v) = (i - 1) * |V(H)| + v.
constexpr Vertex product_id(int layer, Vertex base, int base_order) {
    return (layer - 1) * base_order + base;
}

constexpr ProductLabel product_label(Vertex id, int base_order) {
    return {(id - 1) / base_order + 1, (id - 1) % base_order + 1};
}

/// "i_v"
std::string to_string(ProductLabel label);

struct ProductGraph {
    Graph graph;
    int first_order = 0;
    int base_order = 0;

    Vertex id(int layer, Vertex base) const { return product_id(layer, base, base_order); }
    ProductLabel label(Vertex id) const { return product_label(id, base_order); }
};

/// G1 □ H with vertices numbered by product_id.
ProductGraph cartesian_product(const Graph& g1, const Graph& h);

/// P_n □ H
ProductGraph path_product(int n, const Graph& h);

}  // namespace prodham
