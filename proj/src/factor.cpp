#include "prodham/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "prodham/detail/combinations.hpp"
#include "prodham/errors.hpp"

namespace prodham {

bool PathFactor::is_perfect_matching() const {
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.size() == 2; });
}

std::vector<Edge> PathFactor::edges() const {
    std::vector<Edge> out;
    for (const auto& c : components)
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            out.emplace_back(c[i], c[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_path_factor(const Graph& g, const PathFactor& f) {
    std::vector<char> covered(g.order() + 1, 0);
    int total = 0;
    for (const auto& c : f.components) {
        if (c.size() != 2 && c.size() != 3)
            return false;
        for (Vertex v : c) {
            if (!g.contains(v) || covered[v])
                return false;
            covered[v] = 1;
            ++total;
        }
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (!g.adjacent(c[i], c[i + 1]))
                return false;
    }
    return total == g.order();
}

std::string FactorCertificate::to_text() const {
    std::string s = "S = {";
    for (std::size_t i = 0; i < witness.size(); ++i)
        s += (i ? "," : "") + std::to_string(witness[i]);
    s += "}; i(G-S) = " + std::to_string(isolated_count) + "; 2|S| = " + std::to_string(2 * witness.size());
    return s;
}

int isolated_count(const Graph& g, std::span<const Vertex> removed) {
    std::vector<char> gone(g.order() + 1, 0);
    for (Vertex v : removed)
        gone[v] = 1;
    int count = 0;
    for (Vertex v = 1; v <= g.order(); ++v) {
        if (gone[v])
            continue;
        auto nbrs = g.neighbors(v);
        if (std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return gone[w] != 0; }))
            ++count;
    }
    return count;
}

namespace {

// Depth-first cover of the vertex set by paths on 2 (and optionally 3)
// vertices. Always branches on the smallest uncovered vertex. `feasible` sees
// the covered mask after each placement and may veto the branch.
class CoverSearch {
public:
    using Feasible = std::function<bool(const std::vector<char>&)>;

    CoverSearch(const Graph& g, bool allow_p3, Feasible feasible)
        : g_(g), allow_p3_(allow_p3), feasible_(std::move(feasible)), covered_(g.order() + 1, 0) {}

    std::optional<PathFactor> run() {
        if (g_.order() == 0)
            return PathFactor{};
        for (Vertex v = 1; v <= g_.order(); ++v)
            if (g_.degree(v) == 0)
                return std::nullopt;
        if (!extend(1))
            return std::nullopt;
        return PathFactor{components_};
    }

private:
    bool extend(Vertex from) {
        Vertex v = from;
        while (v <= g_.order() && covered_[v])
            ++v;
        if (v > g_.order())
            return true;

        std::vector<Vertex> free_nbrs;
        for (Vertex x : g_.neighbors(v))
            if (!covered_[x])
                free_nbrs.push_back(x);

        for (Vertex x : free_nbrs)
            if (attempt({v, x}, v))
                return true;
        if (!allow_p3_)
            return false;
        for (Vertex x : free_nbrs)
            for (Vertex y : g_.neighbors(x))
                if (y != v && !covered_[y] && attempt({v, x, y}, v))
                    return true;
        for (std::size_t i = 0; i < free_nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < free_nbrs.size(); ++j)
                if (attempt({free_nbrs[i], v, free_nbrs[j]}, v))
                    return true;
        return false;
    }

    bool attempt(std::vector<Vertex> comp, Vertex v) {
        for (Vertex x : comp)
            covered_[x] = 1;
        bool ok = no_stranded(comp) && (!feasible_ || feasible_(covered_));
        if (ok) {
            components_.push_back(comp);
            if (extend(v + 1))
                return true;
            components_.pop_back();
        }
        for (Vertex x : comp)
            covered_[x] = 0;
        return false;
    }

    // An uncovered neighbour of the new component with no uncovered neighbour
    // of its own can never be covered.
    bool no_stranded(const std::vector<Vertex>& comp) const {
        for (Vertex x : comp)
            for (Vertex y : g_.neighbors(x)) {
                if (covered_[y])
                    continue;
                auto nbrs = g_.neighbors(y);
                if (std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex z) { return covered_[z] != 0; }))
                    return false;
            }
        return true;
    }

    const Graph& g_;
    bool allow_p3_;
    Feasible feasible_;
    std::vector<char> covered_;
    std::vector<std::vector<Vertex>> components_;
};

bool is_forest(const Graph& g) {
    return g.size() + static_cast<std::size_t>(component_count(g)) == static_cast<std::size_t>(g.order());
}

}  // namespace

namespace detail {

std::optional<PathFactor> p23_factor_exhaustive(const Graph& g) { return CoverSearch(g, true, {}).run(); }

bool forest_has_p23_factor(const Graph& g, const std::vector<char>& removed) {
    // Per-vertex states of the rooted subtree:
    //   open   - v uncovered, rest of the subtree covered (v needs its parent)
    //   ext    - v is the end of a P2 with a child, so the parent may extend it to a P3
    //   closed - subtree fully covered (ext, or v inside a finished P3)
    const int n = g.order();
    std::vector<char> seen(n + 1, 0), open(n + 1, 0), ext(n + 1, 0), closed(n + 1, 0);
    std::vector<Vertex> parent(n + 1, 0), order;
    for (Vertex root = 1; root <= n; ++root) {
        if (removed[root] || seen[root])
            continue;
        order.clear();
        order.push_back(root);
        seen[root] = 1;
        for (std::size_t k = 0; k < order.size(); ++k)
            for (Vertex w : g.neighbors(order[k]))
                if (!removed[w] && !seen[w]) {
                    seen[w] = 1;
                    parent[w] = order[k];
                    order.push_back(w);
                }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            Vertex v = *it;
            int bad = 0, open_children = 0, bad_open = 0;
            bool any_ext = false;
            for (Vertex c : g.neighbors(v)) {
                if (removed[c] || c == parent[v] || parent[c] != v)
                    continue;
                if (!closed[c]) {
                    ++bad;
                    bad_open += open[c];
                }
                open_children += open[c];
                any_ext = any_ext || ext[c];
            }
            open[v] = bad == 0;
            ext[v] = (bad == 0 && open_children >= 1) || (bad == 1 && bad_open == 1);
            bool two_open = bad <= 2 && bad_open == bad && open_children >= 2;
            closed[v] = ext[v] || two_open || (bad == 0 && any_ext);
        }
        if (!closed[root])
            return false;
        parent[root] = 0;
    }
    return true;
}

}  // namespace detail

std::optional<PathFactor> find_perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0)
        return std::nullopt;
    return CoverSearch(g, false, {}).run();
}

std::optional<PathFactor> find_p23_factor(const Graph& g) {
    if (!is_forest(g))
        return detail::p23_factor_exhaustive(g);
    std::vector<char> none(g.order() + 1, 0);
    if (!detail::forest_has_p23_factor(g, none))
        return std::nullopt;
    auto steered = CoverSearch(g, true, [&g](const std::vector<char>& covered) {
        return detail::forest_has_p23_factor(g, covered);
    });
    auto f = steered.run();
    if (!f)
        throw std::logic_error("tree factor search disagrees with the dynamic program");
    return f;
}

std::optional<FactorCertificate> wang_certificate(const Graph& g, int order_cap) {
    const int n = g.order();
    if (n > order_cap || n > 64)
        throw Error(ErrorKind::BudgetExceeded,
                    "certificate search limited to order " + std::to_string(std::min(order_cap, 64)));
    if (find_p23_factor(g))
        return std::nullopt;

    auto nbr = detail::neighbor_masks(g);
    std::optional<FactorCertificate> found;
    detail::for_each_subset_by_size(n, [&](std::uint64_t s, int k) {
        int isolated = 0;
        for (int v = 0; v < n; ++v)
            if (!(s >> v & 1) && (nbr[v] & ~s) == 0)
                ++isolated;
        if (isolated <= 2 * k)
            return false;
        found = FactorCertificate{detail::mask_to_vertices(s), isolated};
        return true;
    });
    if (found)
        return found;
    throw std::logic_error("no path factor but no violating set found");
}

FactorCertificate bipartite_certificate(const Graph& h, const Bipartition& bip) {
    for (const Edge& e : h.edges())
        if (bip.color.at(e.u - 1) == bip.color.at(e.v - 1))
            throw Error(ErrorKind::PreconditionFailed, "bipartition does not 2-colour every edge");
    auto general = wang_certificate(h);
    if (!general)
        throw Error(ErrorKind::HasPathFactor, "graph has a path factor");
    std::vector<Vertex> side_a, side_b;
    for (Vertex v : general->witness)
        (bip.on_side_a(v) ? side_a : side_b).push_back(v);
    // i(H - S_A) + i(H - S_B) = i(H - S'), so one side keeps the violation.
    for (const auto* side : {&side_a, &side_b}) {
        int isolated = isolated_count(h, *side);
        if (isolated > 2 * static_cast<int>(side->size()))
            return {*side, isolated};
    }
    throw std::logic_error("neither side of the witness violates the isolated-vertex bound");
}

SufficientConditions sufficient_conditions(const Graph& g) {
    SufficientConditions r;
    auto stats = degree_stats(g);
    const int n = g.order();
    r.delta_third = n > 0 && 3 * stats.min_degree >= n;
    r.dirac_type = n > 0 && stats.min_degree >= 1 && 2 * stats.min_degree >= stats.max_degree;
    r.cubic_bridgeless = n > 0 && stats.min_degree == 3 && stats.max_degree == 3 && is_connected(g) && !has_bridge(g);

    if (n <= kCertificateOrderCap) {
        if ((r.delta_third || r.dirac_type) && !find_p23_factor(g))
            throw std::logic_error("degree condition holds but no path factor was found");
        if (r.cubic_bridgeless && !find_perfect_matching(g))
            throw std::logic_error("bridgeless cubic graph without a perfect matching");
    }
    return r;
}

}  // namespace prodham
