#include "prodham/ham_builder.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>

#include "prodham/product.hpp"

namespace prodham {

char to_char(VertexType x) {
    switch (x) {
        case VertexType::B: return 'B';
        case VertexType::L: return 'L';
        case VertexType::C: return 'C';
        case VertexType::R: return 'R';
    }
    return '?';
}

std::vector<int> column_set(VertexType x, int layers) {
    std::vector<int> out;
    for (int j = 1; j < layers; ++j)
        if (in_column_set(x, j))
            out.push_back(j);
    return out;
}

namespace {

void require_even_layers(int layers, int minimum) {
    if (layers % 2 != 0)
        throw Error(ErrorKind::OddLayers, "layer count " + std::to_string(layers) + " is odd");
    if (layers < minimum)
        throw Error(ErrorKind::TooFewLayers,
                    "layer count " + std::to_string(layers) + " below " + std::to_string(minimum));
}

}  // namespace

Lemma41Counts lemma41_counts(int layers) {
    require_even_layers(layers, 4);
    Lemma41Counts c;
    using enum VertexType;
    for (int j = 1; j < layers; ++j) {
        c.left_right += in_column_set(L, j) && in_column_set(R, j);
        c.right_center += in_column_set(R, j) && in_column_set(C, j);
        c.left_center += in_column_set(L, j) && in_column_set(C, j);
    }
    return c;
}

TypedFactor assign_types(const PathFactor& f) {
    Vertex top = 0;
    for (const auto& c : f.components)
        for (Vertex v : c)
            top = std::max(top, v);
    TypedFactor t{f, std::vector<VertexType>(top, VertexType::B)};
    for (const auto& c : f.components) {
        if (c.size() != 3)
            continue;
        t.types[c[1] - 1] = VertexType::C;
        Vertex lo = std::min(c[0], c[2]), hi = std::max(c[0], c[2]);
        t.types[lo - 1] = VertexType::L;
        t.types[hi - 1] = VertexType::R;
    }
    return t;
}

PeelOrder peel_order(const Graph& tree, const PathFactor& f) {
    if (!is_tree(tree))
        throw Error(ErrorKind::NotTree, "peel order needs a tree");
    if (!is_valid_path_factor(tree, f))
        throw Error(ErrorKind::InvalidFactor, "not a {P2,P3}-factor of the tree");

    const std::size_t k = f.components.size();
    std::vector<int> comp_of(tree.order() + 1, 0);
    for (std::size_t c = 0; c < k; ++c)
        for (Vertex v : f.components[c])
            comp_of[v] = static_cast<int>(c) + 1;
    std::vector<Edge> links;
    for (const Edge& e : tree.edges())
        if (comp_of[e.u] != comp_of[e.v])
            links.emplace_back(comp_of[e.u], comp_of[e.v]);

    PeelOrder peel{{}, Graph(static_cast<int>(k), links)};
    if (!is_tree(peel.contracted))
        throw std::logic_error("contracted factor graph of a tree is not a tree");

    std::vector<int> deg(k + 1, 0);
    for (Vertex c = 1; c <= static_cast<Vertex>(k); ++c)
        deg[c] = peel.contracted.degree(c);
    std::vector<char> gone(k + 1, 0);
    for (std::size_t step = 0; step < k; ++step) {
        Vertex leaf = 1;
        while (gone[leaf] || deg[leaf] > 1)
            ++leaf;
        gone[leaf] = 1;
        for (Vertex nb : peel.contracted.neighbors(leaf))
            if (!gone[nb])
                --deg[nb];
        peel.order.push_back(static_cast<std::size_t>(leaf - 1));
    }
    return peel;
}

namespace {

// Edge set of a partial cycle in P_n □ T, two neighbour slots per product
// vertex, plus per-column stock of the vertical edges still present.
class CycleAssembly {
public:
    CycleAssembly(int layers, int base_order)
        : n_(layers),
          m_(base_order),
          slots_(layers * base_order + 1, {0, 0}),
          stock_(base_order + 1, std::vector<char>(layers, 0)) {}

    Vertex id(int layer, Vertex v) const { return product_id(layer, v, m_); }

    void add(Vertex a, Vertex b) {
        attach(a, b);
        attach(b, a);
        auto la = product_label(a, m_), lb = product_label(b, m_);
        if (la.base == lb.base)
            stock_[la.base][std::min(la.layer, lb.layer)] = 1;
    }

    void remove(Vertex a, Vertex b) {
        detach(a, b);
        detach(b, a);
        auto la = product_label(a, m_), lb = product_label(b, m_);
        if (la.base == lb.base)
            stock_[la.base][std::min(la.layer, lb.layer)] = 0;
    }

    void add_vertical(Vertex v, int j) { add(id(j, v), id(j + 1, v)); }
    void add_rung(int layer, Vertex a, Vertex b) { add(id(layer, a), id(layer, b)); }
    bool has_vertical(Vertex v, int j) const { return stock_[v][j] != 0; }

    void place_p2(Vertex u, Vertex w) {
        std::set<int> rungs{1, n_};
        for (int i : rungs)
            add_rung(i, u, w);
        for (int j = 1; j < n_; ++j) {
            add_vertical(u, j);
            add_vertical(w, j);
        }
    }

    void place_p3(Vertex u, Vertex v, Vertex w) {
        using enum VertexType;
        std::set<int> uv{1, n_}, vw{n_};
        for (int i = 1; i <= n_; ++i) {
            if (i % 4 == 2 || i % 4 == 3)
                uv.insert(i);
            if (i % 4 == 0 || i % 4 == 1)
                vw.insert(i);
        }
        for (int i : uv)
            add_rung(i, u, v);
        for (int i : vw)
            add_rung(i, v, w);
        for (int j = 1; j < n_; ++j) {
            if (in_column_set(L, j))
                add_vertical(u, j);
            if (in_column_set(C, j))
                add_vertical(v, j);
            if (in_column_set(R, j))
                add_vertical(w, j);
        }
    }

    /// Merge the cycle through column `attached` into the one through
    /// `placed` at vertical index j.
    void splice(Vertex attached, Vertex placed, int j) {
        remove(id(j, attached), id(j + 1, attached));
        remove(id(j, placed), id(j + 1, placed));
        add_rung(j, attached, placed);
        add_rung(j + 1, attached, placed);
    }

    /// Walks the edge set from vertex 1; throws if it is not one cycle
    /// through all product vertices.
    HamCycle to_cycle() const {
        HamCycle h{{}, n_, m_};
        const int total = n_ * m_;
        Vertex prev = 0, cur = 1;
        do {
            h.vertices.push_back(cur);
            const auto& s = slots_[cur];
            if (!s[0] || !s[1])
                throw std::logic_error("assembled edge set has a vertex of degree < 2");
            Vertex next = s[0] != prev ? s[0] : s[1];
            if (prev == 0)
                next = std::min(s[0], s[1]);
            prev = cur;
            cur = next;
        } while (cur != 1 && static_cast<int>(h.vertices.size()) <= total);
        if (static_cast<int>(h.vertices.size()) != total)
            throw std::logic_error("assembled edge set is not a single spanning cycle");
        return h;
    }

    std::vector<int> counts() const {
        std::vector<int> out(m_, 0);
        for (Vertex v = 1; v <= m_; ++v)
            out[v - 1] = static_cast<int>(std::count(stock_[v].begin(), stock_[v].end(), 1));
        return out;
    }

private:
    void attach(Vertex a, Vertex b) {
        auto& s = slots_[a];
        if (!s[0])
            s[0] = b;
        else if (!s[1])
            s[1] = b;
        else
            throw std::logic_error("product vertex already has two cycle edges");
    }

    void detach(Vertex a, Vertex b) {
        auto& s = slots_[a];
        if (s[0] == b)
            s[0] = 0;
        else if (s[1] == b)
            s[1] = 0;
        else
            throw std::logic_error("removing an edge that is not in the cycle");
    }

    int n_;
    int m_;
    std::vector<std::array<Vertex, 2>> slots_;
    std::vector<std::vector<char>> stock_;  // stock_[v][j], j in 1..n-1
};

void place_component(CycleAssembly& a, const std::vector<Vertex>& comp, const TypedFactor& typed) {
    if (comp.size() == 2) {
        a.place_p2(comp[0], comp[1]);
        return;
    }
    Vertex left = comp[0], right = comp[2];
    if (typed.type(left) != VertexType::L)
        std::swap(left, right);
    a.place_p3(left, comp[1], right);
}

// Reassembles the cycle in reverse peel order: the last surviving component
// gets its standard cycle, then every earlier-peeled component is attached
// to the already placed part across its unique tree edge u1 u2.
BuildResult assemble(int layers, const Graph& tree, const TypedFactor& typed) {
    const auto& comps = typed.factor.components;
    auto peel = peel_order(tree, typed.factor);
    CycleAssembly a(layers, tree.order());
    std::vector<char> placed(tree.order() + 1, 0);

    for (auto it = peel.order.rbegin(); it != peel.order.rend(); ++it) {
        const auto& comp = comps[*it];
        Vertex u1 = 0, u2 = 0;
        for (Vertex x : comp)
            for (Vertex y : tree.neighbors(x))
                if (placed[y] && !u1) {
                    u1 = x;
                    u2 = y;
                }
        place_component(a, comp, typed);
        for (Vertex x : comp)
            placed[x] = 1;
        if (it == peel.order.rbegin())
            continue;
        if (!u1)
            throw std::logic_error("peeled component has no tree edge to the placed part");

        const VertexType attach_type = typed.type(u1);
        int j = 0;
        for (int i = 1; i < layers && !j; ++i)
            if (in_column_set(attach_type, i) && a.has_vertical(u2, i))
                j = i;
        // The counting bound on |Y ∩ X| guarantees a candidate under the
        // layer preconditions; running dry means the bookkeeping is wrong.
        if (!j)
            throw std::logic_error("no splice index at column " + std::to_string(u2));
        if (!a.has_vertical(u1, j))
            throw std::logic_error("fresh component cycle lacks vertical edge " + std::to_string(j));
        a.splice(u1, u2, j);
    }
    return {a.to_cycle().canonical(), a.counts()};
}

}  // namespace

HamCycle standard_cycle_p2(int layers, Vertex u, Vertex w, int base_order) {
    if (layers < 2)
        throw Error(ErrorKind::TooFewLayers, "standard P2 cycle needs at least 2 layers");
    HamCycle h{{}, layers, base_order};
    for (int i = 1; i <= layers; ++i)
        h.vertices.push_back(product_id(i, u, base_order));
    for (int i = layers; i >= 1; --i)
        h.vertices.push_back(product_id(i, w, base_order));
    return h;
}

HamCycle standard_cycle_p3(int layers, Vertex u, Vertex v, Vertex w, int base_order) {
    if (layers % 2 != 0)
        throw Error(ErrorKind::OddLayers, "standard P3 cycle needs an even layer count");
    if (layers < 4)
        throw Error(ErrorKind::TooFewLayers, "standard P3 cycle needs at least 4 layers");
    CycleAssembly a(layers, 3);
    a.place_p3(1, 2, 3);
    HamCycle walk = a.to_cycle();
    // Present it starting at 1_u heading up column u.
    auto& seq = walk.vertices;
    std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), 1), seq.end());
    if (seq[1] != product_id(2, 1, 3))
        std::reverse(seq.begin() + 1, seq.end());
    const Vertex column[] = {u, v, w};
    for (Vertex& x : seq) {
        auto l = product_label(x, 3);
        x = product_id(l.layer, column[l.base - 1], base_order);
    }
    walk.base_order = base_order;
    return walk;
}

BuildResult build_ham_pm(int layers, const Graph& tree, const std::optional<PathFactor>& matching) {
    if (!is_tree(tree))
        throw Error(ErrorKind::NotTree, "matching construction needs a tree");
    const int need = std::max(2, max_degree(tree));
    if (layers < need)
        throw Error(ErrorKind::TooFewLayers,
                    "need at least " + std::to_string(need) + " layers, got " + std::to_string(layers));
    PathFactor m;
    if (matching) {
        if (!matching->is_perfect_matching() || !is_valid_path_factor(tree, *matching))
            throw Error(ErrorKind::InvalidFactor, "supplied factor is not a perfect matching of the tree");
        m = *matching;
    } else if (auto found = find_perfect_matching(tree)) {
        m = *found;
    } else {
        throw Error(ErrorKind::NoPerfectMatching, "tree has no perfect matching");
    }
    return assemble(layers, tree, assign_types(m));
}

BuildResult build_ham_pf(int layers, const Graph& tree, const std::optional<PathFactor>& factor) {
    if (!is_tree(tree))
        throw Error(ErrorKind::NotTree, "path-factor construction needs a tree");
    if (layers % 2 != 0)
        throw Error(ErrorKind::OddLayers, "layer count " + std::to_string(layers) + " is odd");
    const int need = std::max(2, 4 * max_degree(tree) - 2);
    if (layers < need)
        throw Error(ErrorKind::TooFewLayers,
                    "need at least " + std::to_string(need) + " layers, got " + std::to_string(layers));
    PathFactor f;
    if (factor) {
        if (!is_valid_path_factor(tree, *factor))
            throw Error(ErrorKind::InvalidFactor, "supplied factor is not a {P2,P3}-factor of the tree");
        f = *factor;
    } else if (auto found = find_p23_factor(tree)) {
        f = *found;
    } else {
        throw Error(ErrorKind::NoP23Factor, "tree has no {P2,P3}-factor");
    }
    return assemble(layers, tree, assign_types(f));
}

namespace {

std::optional<FactorCertificate> certificate_if_available(const Graph& g) {
    if (g.order() > kCertificateOrderCap)
        return std::nullopt;
    return wang_certificate(g);
}

}  // namespace

MainResult build_ham_main(int layers, const Graph& g2, BuildMode mode) {
    if (!is_connected(g2))
        throw Error(ErrorKind::Disconnected, "base graph is not connected");
    const int delta = max_degree(g2);
    const int pm_need = std::max(2, delta);
    const int pf_need = std::max(2, 4 * delta - 2);

    std::optional<PathFactor> matching, factor;
    if (mode != BuildMode::PathFactor)
        matching = find_perfect_matching(g2);
    if (mode == BuildMode::PathFactor || (mode == BuildMode::Auto && !(matching && layers >= pm_need)))
        factor = find_p23_factor(g2);

    MainResult r;
    if (matching && layers >= pm_need) {
        r.used = BuildMode::Matching;
        r.factor = *matching;
    } else if (factor && layers % 2 == 0 && layers >= pf_need) {
        r.used = BuildMode::PathFactor;
        r.factor = *factor;
    } else if (mode == BuildMode::Matching && !matching) {
        auto cert = find_p23_factor(g2) ? std::nullopt : certificate_if_available(g2);
        throw NoFactorError("base graph has no perfect matching", cert);
    } else if (mode == BuildMode::Matching) {
        throw LayerBoundError("matching construction needs n >= " + std::to_string(pm_need), pm_need);
    } else if (!factor) {
        throw NoFactorError("base graph has no path factor", certificate_if_available(g2));
    } else {
        int required = pf_need;
        if (matching)
            required = std::min(required, pm_need);
        std::string why = matching ? "need n >= " + std::to_string(pm_need) + " (matching) or even n >= " +
                                         std::to_string(pf_need) + " (path factor)"
                                   : "path-factor construction needs even n >= " + std::to_string(pf_need);
        throw LayerBoundError(why, required);
    }

    r.tree = spanning_tree_containing(g2, r.factor.edges());
    auto built = r.used == BuildMode::Matching ? build_ham_pm(layers, r.tree, r.factor)
                                               : build_ham_pf(layers, r.tree, r.factor);
    r.cycle = std::move(built.cycle);
    if (!verify_cycle(path_product(layers, g2).graph, r.cycle))
        throw std::logic_error("constructed cycle failed validation");
    return r;
}

std::vector<int> column_counts(const HamCycle& cycle) {
    std::vector<int> out(cycle.base_order, 0);
    for (const Edge& e : cycle.edges()) {
        auto a = product_label(e.u, cycle.base_order), b = product_label(e.v, cycle.base_order);
        if (a.base == b.base)
            ++out[a.base - 1];
    }
    return out;
}

bool verify_edge_contract(const HamCycle& cycle, const Graph& tree, const TypedFactor& typed, int layers,
                          BuildMode mode) {
    const int m = tree.order();
    if (cycle.layers != layers || cycle.base_order != m || static_cast<int>(typed.types.size()) != m)
        return false;
    if (mode == BuildMode::Auto)
        return false;
    std::vector<std::vector<int>> used(m + 1);
    for (const Edge& e : cycle.edges()) {
        auto a = product_label(e.u, m), b = product_label(e.v, m);
        if (a.base == b.base)
            used[a.base].push_back(std::min(a.layer, b.layer));
    }
    for (Vertex v = 1; v <= m; ++v) {
        const int count = static_cast<int>(used[v].size());
        if (mode == BuildMode::Matching) {
            if (count != layers - tree.degree(v))
                return false;
            continue;
        }
        if (layers % 2 != 0)
            return false;
        const VertexType x = typed.type(v);
        for (int j : used[v])
            if (!in_column_set(x, j))
                return false;
        const int size = static_cast<int>(column_set(x, layers).size());
        if (count != size - tree.degree(v) + type_degree(x))
            return false;
    }
    return true;
}

}  // namespace prodham
