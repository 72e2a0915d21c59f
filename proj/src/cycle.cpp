#include "prodham/cycle.hpp"

#include <algorithm>

namespace prodham {

std::vector<Edge> HamCycle::edges() const {
    std::vector<Edge> out;
    const std::size_t k = vertices.size();
    if (k < 2)
        return out;
    for (std::size_t i = 0; i < k; ++i)
        out.emplace_back(vertices[i], vertices[(i + 1) % k]);
    std::sort(out.begin(), out.end());
    return out;
}

HamCycle HamCycle::canonical() const {
    HamCycle out = *this;
    const std::size_t k = vertices.size();
    if (k < 3)
        return out;
    auto start = static_cast<std::size_t>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    Vertex fwd = vertices[(start + 1) % k];
    Vertex back = vertices[(start + k - 1) % k];
    for (std::size_t i = 0; i < k; ++i)
        out.vertices[i] = fwd < back ? vertices[(start + i) % k] : vertices[(start + k - i) % k];
    return out;
}

bool verify_cycle(const Graph& g, const HamCycle& cycle) {
    const auto& seq = cycle.vertices;
    if (g.order() < 3 || seq.size() != static_cast<std::size_t>(g.order()))
        return false;
    std::vector<char> seen(g.order() + 1, 0);
    for (Vertex v : seq) {
        if (!g.contains(v) || seen[v])
            return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()]))
            return false;
    return true;
}

bool verify_path(const Graph& g, const std::vector<Vertex>& path) {
    if (path.size() != static_cast<std::size_t>(g.order()) || path.empty())
        return false;
    std::vector<char> seen(g.order() + 1, 0);
    for (Vertex v : path) {
        if (!g.contains(v) || seen[v])
            return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1]))
            return false;
    return true;
}

}  // namespace prodham
