#include "prodham/product.hpp"

#include "prodham/errors.hpp"

namespace prodham {

std::string to_string(ProductLabel label) {
    return std::to_string(label.layer) + "_" + std::to_string(label.base);
}

ProductGraph cartesian_product(const Graph& g1, const Graph& h) {
    if (g1.order() == 0 || h.order() == 0)
        throw Error(ErrorKind::PreconditionFailed, "cartesian product needs non-empty factors");
    const int m = h.order();
    std::vector<Edge> edges;
    edges.reserve(g1.order() * h.size() + m * g1.size());
    for (int i = 1; i <= g1.order(); ++i)
        for (const Edge& e : h.edges())
            edges.emplace_back(product_id(i, e.u, m), product_id(i, e.v, m));
    for (const Edge& e : g1.edges())
        for (Vertex v = 1; v <= m; ++v)
            edges.emplace_back(product_id(e.u, v, m), product_id(e.v, v, m));
    return {Graph(g1.order() * m, edges), g1.order(), m};
}

ProductGraph path_product(int n, const Graph& h) { return cartesian_product(Graph::path(n), h); }

}  // namespace prodham
