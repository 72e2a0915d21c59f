#include "prodham/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "prodham/errors.hpp"

namespace prodham {

namespace {

// Rooted AHU code of the subtree at v, ignoring edges for which `skip`
// returns true.
template <class Skip>
std::string rooted_code(const Graph& g, Vertex v, Vertex parent, Skip&& skip) {
    std::vector<std::string> parts;
    for (Vertex w : g.neighbors(v))
        if (w != parent && !skip(v, w))
            parts.push_back(rooted_code(g, w, v, skip));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts)
        out += p;
    return out + ")";
}

std::string rooted_code(const Graph& g, Vertex v, Vertex parent) {
    return rooted_code(g, v, parent, [](Vertex, Vertex) { return false; });
}

std::vector<Vertex> centroids(const Graph& tree) {
    const int n = tree.order();
    std::vector<Vertex> order{1}, parent(n + 1, 0);
    std::vector<int> size(n + 1, 1);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex w : tree.neighbors(order[i]))
            if (w != parent[order[i]]) {
                parent[w] = order[i];
                order.push_back(w);
            }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it])
            size[parent[*it]] += size[*it];
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n; ++v) {
        int heaviest = n - size[v];
        for (Vertex w : tree.neighbors(v))
            if (w != parent[v])
                heaviest = std::max(heaviest, size[w]);
        if (2 * heaviest <= n)
            out.push_back(v);
    }
    return out;
}

Vertex canonical_root(const Graph& tree, std::string* code) {
    Vertex best = 0;
    std::string best_code;
    for (Vertex c : centroids(tree)) {
        std::string s = rooted_code(tree, c, 0);
        if (!best || s < best_code) {
            best = c;
            best_code = std::move(s);
        }
    }
    if (code)
        *code = std::move(best_code);
    return best;
}

void require_tree(const Graph& g) {
    if (!is_tree(g))
        throw Error(ErrorKind::NotTree, "expected a tree");
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
    require_tree(tree);
    std::string code;
    canonical_root(tree, &code);
    return code;
}

Graph canonical_tree(const Graph& tree) {
    require_tree(tree);
    const Vertex root = canonical_root(tree, nullptr);
    std::vector<Vertex> label(tree.order() + 1, 0), queue{root}, parent(tree.order() + 1, 0);
    label[root] = 1;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex v = queue[i];
        std::vector<std::pair<std::string, Vertex>> kids;
        for (Vertex w : tree.neighbors(v))
            if (w != parent[v])
                kids.emplace_back(rooted_code(tree, w, v), w);
        std::sort(kids.begin(), kids.end());
        for (auto& [code, w] : kids) {
            parent[w] = v;
            label[w] = static_cast<Vertex>(queue.size()) + 1;
            queue.push_back(w);
            edges.emplace_back(label[v], label[w]);
        }
    }
    return Graph(tree.order(), edges);
}

std::vector<Graph> trees_of_order(int order) {
    if (order < 1)
        throw std::invalid_argument("tree order must be positive");
    if (order > kTreeOrderCap)
        throw Error(ErrorKind::BudgetExceeded, "tree enumeration limited to order " + std::to_string(kTreeOrderCap));
    std::vector<Graph> level{Graph(1)};
    for (int n = 2; n <= order; ++n) {
        std::map<std::string, Graph> next;
        for (const Graph& t : level)
            for (Vertex v = 1; v < n; ++v) {
                Graph grown = Graph(n, t.edges()).with_edge(Edge(v, n));
                std::string code = tree_canonical_form(grown);
                if (!next.contains(code))
                    next.emplace(std::move(code), canonical_tree(grown));
            }
        level.clear();
        for (auto& [code, g] : next)
            level.push_back(std::move(g));
    }
    return level;
}

std::vector<Graph> enumerate_trees(int max_order) {
    if (max_order > kTreeOrderCap)
        throw Error(ErrorKind::BudgetExceeded, "tree enumeration limited to order " + std::to_string(kTreeOrderCap));
    std::vector<Graph> out;
    for (int n = 2; n <= max_order; ++n)
        for (Graph& t : trees_of_order(n))
            out.push_back(std::move(t));
    return out;
}

std::string unicyclic_canonical_form(const Graph& g) {
    const int n = g.order();
    if (!is_connected(g) || static_cast<int>(g.size()) != n)
        throw Error(ErrorKind::PreconditionFailed, "expected a connected unicyclic graph");
    // Peel leaves until only the cycle is left.
    std::vector<int> deg(n + 1);
    std::vector<char> on_cycle(n + 1, 1);
    std::vector<Vertex> leaves;
    for (Vertex v = 1; v <= n; ++v)
        if ((deg[v] = g.degree(v)) == 1)
            leaves.push_back(v);
    while (!leaves.empty()) {
        Vertex v = leaves.back();
        leaves.pop_back();
        on_cycle[v] = 0;
        for (Vertex w : g.neighbors(v))
            if (on_cycle[w] && --deg[w] == 1)
                leaves.push_back(w);
    }
    std::vector<Vertex> cycle;
    Vertex start = 1;
    while (!on_cycle[start])
        ++start;
    for (Vertex prev = 0, cur = start;;) {
        cycle.push_back(cur);
        Vertex next = 0;
        for (Vertex w : g.neighbors(cur))
            if (on_cycle[w] && w != prev) {
                next = w;
                break;
            }
        prev = cur;
        cur = next;
        if (cur == start)
            break;
    }
    auto skip = [&](Vertex a, Vertex b) { return on_cycle[a] && on_cycle[b]; };
    std::vector<std::string> codes;
    for (Vertex v : cycle)
        codes.push_back(rooted_code(g, v, 0, skip));

    const std::size_t k = codes.size();
    std::string best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t r = 0; r < k; ++r) {
            std::string s = "C" + std::to_string(k) + ":";
            for (std::size_t i = 0; i < k; ++i)
                s += codes[(r + i) % k] + ".";
            if (best.empty() || s < best)
                best = s;
        }
        std::reverse(codes.begin(), codes.end());
    }
    return best;
}

std::vector<Graph> unicyclic_extensions(const std::vector<Graph>& trees) {
    std::map<std::string, Graph> found;
    for (const Graph& t : trees)
        for (Vertex u = 1; u <= t.order(); ++u)
            for (Vertex v = u + 1; v <= t.order(); ++v) {
                if (t.adjacent(u, v))
                    continue;
                Graph g = t.with_edge(Edge(u, v));
                std::string code = unicyclic_canonical_form(g);
                if (!found.contains(code))
                    found.emplace(std::move(code), std::move(g));
            }
    std::vector<Graph> out;
    for (auto& [code, g] : found)
        out.push_back(std::move(g));
    return out;
}

}  // namespace prodham
