#include "prodham/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "prodham/detail/union_find.hpp"
#include "prodham/errors.hpp"

namespace prodham {

namespace {

[[noreturn]] void malformed(const std::string& msg) { throw Error(ErrorKind::Malformed, msg); }

}  // namespace

Graph::Graph(int order) : adj_(order < 0 ? 0 : order) {
    if (order < 0)
        malformed("negative order");
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
    for (const Edge& e : edges) {
        if (e.u == e.v)
            malformed("loop at vertex " + std::to_string(e.u));
        if (!contains(e.u) || !contains(e.v))
            malformed("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " out of range 1.." +
                      std::to_string(order));
        adj_[e.u - 1].push_back(e.v);
        adj_[e.v - 1].push_back(e.u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            malformed("duplicate edge");
    }
    edge_count_ = edges.size();
}

Graph::Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(order, [&] {
          std::vector<Edge> list;
          for (auto [a, b] : edges) {
              if (a == b)
                  malformed("loop at vertex " + std::to_string(a));
              list.emplace_back(a, b);
          }
          return list;
      }()) {}

Graph Graph::path(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph Graph::cycle(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(i, i + 1);
    if (n >= 3)
        e.emplace_back(1, n);
    return Graph(n, e);
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

Graph Graph::star(int leaves) {
    std::vector<Edge> e;
    for (int i = 2; i <= leaves + 1; ++i)
        e.emplace_back(1, i);
    return Graph(leaves + 1, e);
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j)
            e.emplace_back(i, j);
    return Graph(a + b, e);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b))
        return false;
    const auto& list = adj_[a - 1];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex v = 1; v <= order(); ++v)
        for (Vertex w : neighbors(v))
            if (v < w)
                out.emplace_back(v, w);
    return out;
}

Graph Graph::with_edge(Edge e) const {
    auto list = edges();
    list.push_back(e);
    return Graph(order(), list);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> index(order() + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        index[sorted[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> list;
    for (const Edge& e : edges())
        if (index[e.u] && index[e.v])
            list.emplace_back(index[e.u], index[e.v]);
    return Graph(static_cast<int>(sorted.size()), list);
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.degrees.resize(g.order());
    for (Vertex v = 1; v <= g.order(); ++v)
        s.degrees[v - 1] = g.degree(v);
    if (!s.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
        s.min_degree = *lo;
        s.max_degree = *hi;
    }
    return s;
}

int max_degree(const Graph& g) { return degree_stats(g).max_degree; }

int component_count(const Graph& g) {
    detail::UnionFind uf(g.order());
    for (const Edge& e : g.edges())
        uf.unite(e.u - 1, e.v - 1);
    return uf.sets();
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

bool is_complete(const Graph& g) {
    auto n = static_cast<std::size_t>(g.order());
    return n == 0 || g.size() == n * (n - 1) / 2;
}

bool has_bridge(const Graph& g) {
    // Iterative lowlink DFS; an edge (p, v) is a bridge when low[v] > disc[p].
    const int n = g.order();
    std::vector<int> disc(n + 1, 0), low(n + 1, 0), parent(n + 1, 0);
    std::vector<std::size_t> next(n + 1, 0);
    int timer = 0;
    for (Vertex root = 1; root <= n; ++root) {
        if (disc[root])
            continue;
        std::vector<Vertex> stack{root};
        disc[root] = low[root] = ++timer;
        while (!stack.empty()) {
            Vertex v = stack.back();
            auto nbrs = g.neighbors(v);
            if (next[v] < nbrs.size()) {
                Vertex w = nbrs[next[v]++];
                if (!disc[w]) {
                    parent[w] = v;
                    disc[w] = low[w] = ++timer;
                    stack.push_back(w);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (Vertex p = parent[v]) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p])
                        return true;
                }
            }
        }
    }
    return false;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n + 1, -1);
    for (Vertex s = 1; s <= n; ++s) {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    b.color.resize(n);
    for (Vertex v = 1; v <= n; ++v) {
        b.color[v - 1] = static_cast<std::uint8_t>(color[v]);
        (color[v] == 0 ? b.side_a : b.side_b).push_back(v);
    }
    return b;
}

Graph spanning_tree_containing(const Graph& g, std::span<const Edge> seed) {
    for (const Edge& e : seed)
        if (!g.adjacent(e.u, e.v))
            throw Error(ErrorKind::NotSubgraph,
                        "seed edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not in the graph");
    detail::UnionFind uf(g.order());
    std::vector<Edge> tree;
    for (const Edge& e : seed) {
        if (!uf.unite(e.u - 1, e.v - 1))
            throw Error(ErrorKind::CyclicSeed, "seed edges contain a cycle");
        tree.push_back(e);
    }
    if (!is_connected(g))
        throw Error(ErrorKind::Disconnected, "graph is not connected");
    for (const Edge& e : g.edges())
        if (uf.unite(e.u - 1, e.v - 1))
            tree.push_back(e);
    return Graph(g.order(), tree);
}

}  // namespace prodham
