#pragma once

// Reference implementations used only by the tests. They share nothing with
// the library beyond the Graph container and deliberately use the dumbest
// correct method.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "prodham/graph.hpp"

namespace oracle {

using prodham::Edge;
using prodham::Graph;
using prodham::Vertex;

using Matrix = std::vector<std::vector<char>>;

inline Matrix adjacency(const Graph& g) {
    Matrix m(g.order() + 1, std::vector<char>(g.order() + 1, 0));
    for (const Edge& e : g.edges())
        m[e.u][e.v] = m[e.v][e.u] = 1;
    return m;
}

// Components of G - removed, by repeated flood fill.
inline int components(const Graph& g, const std::vector<Vertex>& removed) {
    const int n = g.order();
    Matrix a = adjacency(g);
    std::vector<char> gone(n + 1, 0), seen(n + 1, 0);
    for (Vertex v : removed)
        gone[v] = 1;
    int count = 0;
    for (int s = 1; s <= n; ++s) {
        if (gone[s] || seen[s])
            continue;
        ++count;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 1; y <= n; ++y)
                if (a[x][y] && !gone[y] && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
    }
    return count;
}

inline int isolated(const Graph& g, const std::vector<Vertex>& removed) {
    const int n = g.order();
    Matrix a = adjacency(g);
    std::vector<char> gone(n + 1, 0);
    for (Vertex v : removed)
        gone[v] = 1;
    int count = 0;
    for (int x = 1; x <= n; ++x) {
        if (gone[x])
            continue;
        bool alone = true;
        for (int y = 1; y <= n; ++y)
            if (a[x][y] && !gone[y])
                alone = false;
        count += alone;
    }
    return count;
}

// Components are vertex tuples; each must be a path of order >= 2 in g.
inline bool valid_path_factor(const Graph& g, const std::vector<std::vector<Vertex>>& comps, int max_len = 3) {
    Matrix a = adjacency(g);
    std::vector<int> hits(g.order() + 1, 0);
    for (const auto& c : comps) {
        if (c.size() < 2 || static_cast<int>(c.size()) > max_len)
            return false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 1 || c[i] > g.order())
                return false;
            ++hits[c[i]];
            if (i + 1 < c.size() && !a[c[i]][c[i + 1]])
                return false;
        }
    }
    for (int v = 1; v <= g.order(); ++v)
        if (hits[v] != 1)
            return false;
    return true;
}

// Existence of a {P2,P3}-factor by trying every cover of the smallest
// uncovered vertex.
inline bool has_p23_factor(const Matrix& a, std::vector<char>& used, int n) {
    int v = 1;
    while (v <= n && used[v])
        ++v;
    if (v > n)
        return true;
    used[v] = 1;
    for (int x = 1; x <= n; ++x) {
        if (used[x] || !a[v][x])
            continue;
        used[x] = 1;
        if (has_p23_factor(a, used, n)) {
            used[x] = used[v] = 0;
            return true;
        }
        for (int y = 1; y <= n; ++y) {
            if (used[y] || !(a[x][y] || a[v][y]))
                continue;
            used[y] = 1;
            bool ok = has_p23_factor(a, used, n);
            used[y] = 0;
            if (ok) {
                used[x] = used[v] = 0;
                return true;
            }
        }
        used[x] = 0;
    }
    used[v] = 0;
    return false;
}

inline bool has_p23_factor(const Graph& g) {
    Matrix a = adjacency(g);
    std::vector<char> used(g.order() + 1, 0);
    return has_p23_factor(a, used, g.order());
}

inline bool has_perfect_matching(const Graph& g) {
    const int n = g.order();
    if (n % 2)
        return false;
    Matrix a = adjacency(g);
    std::vector<char> used(n + 1, 0);
    auto rec = [&](auto&& self) -> bool {
        int v = 1;
        while (v <= n && used[v])
            ++v;
        if (v > n)
            return true;
        used[v] = 1;
        for (int x = v + 1; x <= n; ++x)
            if (!used[x] && a[v][x]) {
                used[x] = 1;
                bool ok = self(self);
                used[x] = 0;
                if (ok) {
                    used[v] = 0;
                    return true;
                }
            }
        used[v] = 0;
        return false;
    };
    return rec(rec);
}

// Hamiltonicity over all orderings with vertex 1 fixed first.
inline bool permutation_hamiltonian(const Graph& g) {
    const int n = g.order();
    if (n < 3)
        return false;
    Matrix a = adjacency(g);
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 2);
    do {
        if (!a[1][rest.front()] || !a[rest.back()][1])
            continue;
        bool ok = true;
        for (int i = 0; ok && i + 1 < n - 1; ++i)
            ok = a[rest[i]][rest[i + 1]];
        if (ok)
            return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

inline bool permutation_traceable(const Graph& g) {
    const int n = g.order();
    Matrix a = adjacency(g);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        bool ok = true;
        for (int i = 0; ok && i + 1 < n; ++i)
            ok = a[p[i]][p[i + 1]];
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Held-Karp reachability over subsets containing vertex 1; order <= 24.
inline bool subset_dp_hamiltonian(const Graph& g) {
    const int n = g.order();
    if (n < 3)
        return false;
    Matrix a = adjacency(g);
    // reach[mask] = bitset of end vertices v such that some path 1 -> v covers mask
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    reach[1] = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
        const std::uint32_t ends = reach[mask];
        if (!ends)
            continue;
        for (int v = 0; v < n; ++v) {
            if (!(ends >> v & 1))
                continue;
            for (int w = 1; w < n; ++w)
                if (!(mask >> w & 1) && a[v + 1][w + 1])
                    reach[mask | (1u << w)] |= 1u << w;
        }
    }
    const std::uint32_t full = (1u << n) - 1;
    for (int v = 1; v < n; ++v)
        if ((reach[full] >> v & 1) && a[v + 1][1])
            return true;
    return false;
}

// Independent cycle check: a permutation of 1..order with consecutive adjacency.
inline bool is_hamiltonian_sequence(const Graph& g, const std::vector<Vertex>& seq) {
    const int n = g.order();
    if (static_cast<int>(seq.size()) != n || n < 3)
        return false;
    std::vector<char> seen(n + 1, 0);
    Matrix a = adjacency(g);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Vertex v = seq[i];
        if (v < 1 || v > n || seen[v])
            return false;
        seen[v] = 1;
        if (!a[v][seq[(i + 1) % seq.size()]])
            return false;
    }
    return true;
}

struct Fraction {
    long long num;
    long long den;
};

// Toughness as |S| / c(G - S) minimised over all cut sets; nullopt = infinite.
inline std::optional<Fraction> toughness(const Graph& g) {
    const int n = g.order();
    std::optional<Fraction> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.push_back(v + 1);
        if (static_cast<int>(s.size()) >= n - 1)
            continue;
        int c = components(g, s);
        if (c < 2)
            continue;
        Fraction f{static_cast<long long>(s.size()), c};
        if (!best || f.num * best->den < best->num * f.den)
            best = f;
    }
    if (best) {
        long long d = std::gcd(best->num, best->den);
        if (d > 1) {
            best->num /= d;
            best->den /= d;
        }
    }
    return best;
}

// Isomorphism by backtracking over degree-respecting bijections.
inline bool isomorphic(const Graph& g, const Graph& h) {
    const int n = g.order();
    if (n != h.order() || g.size() != h.size())
        return false;
    Matrix a = adjacency(g), b = adjacency(h);
    std::vector<int> map(n + 1, 0);
    std::vector<char> taken(n + 1, 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v > n)
            return true;
        for (int w = 1; w <= n; ++w) {
            if (taken[w] || g.degree(v) != h.degree(w))
                continue;
            bool ok = true;
            for (int u = 1; ok && u < v; ++u)
                ok = a[u][v] == b[map[u]][w];
            if (!ok)
                continue;
            map[v] = w;
            taken[w] = 1;
            if (self(self, v + 1))
                return true;
            taken[w] = 0;
        }
        return false;
    };
    return rec(rec, 1);
}

inline bool two_colouring_ok(const Graph& g, const std::vector<int>& colour) {
    for (const Edge& e : g.edges())
        if (colour[e.u - 1] == colour[e.v - 1])
            return false;
    return true;
}

// Random connected graph: random spanning tree (random attachment) plus
// extra random edges.
inline Graph random_connected(std::mt19937& rng, int order, int extra) {
    std::set<std::pair<int, int>> edges;
    for (int v = 2; v <= order; ++v) {
        int u = std::uniform_int_distribution<int>(1, v - 1)(rng);
        edges.insert({u, v});
    }
    const int max_edges = order * (order - 1) / 2;
    std::uniform_int_distribution<int> pick(1, order);
    for (int k = 0; k < extra && static_cast<int>(edges.size()) < max_edges; ++k) {
        int u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        edges.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<Edge> list;
    for (auto [u, v] : edges)
        list.emplace_back(u, v);
    return Graph(order, list);
}

// All graphs on `order` vertices (each edge subset), as edge masks.
inline Graph from_mask(int order, std::uint64_t mask) {
    std::vector<Edge> list;
    int bit = 0;
    for (int u = 1; u <= order; ++u)
        for (int v = u + 1; v <= order; ++v, ++bit)
            if (mask >> bit & 1)
                list.emplace_back(u, v);
    return Graph(order, list);
}

}  // namespace oracle
