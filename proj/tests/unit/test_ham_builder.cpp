#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "prodham/errors.hpp"
#include "prodham/fixtures.hpp"
#include "prodham/ham_builder.hpp"
#include "prodham/product.hpp"
#include "prodham/trees.hpp"

using namespace prodham;

namespace {

HamCycle from_labels(int layers, int base_order, std::initializer_list<std::pair<int, int>> labels) {
    HamCycle c{{}, layers, base_order};
    for (auto [i, v] : labels)
        c.vertices.push_back(product_id(i, v, base_order));
    return c;
}

// Layers j with the vertical edge j_v (j+1)_v on the cycle, per column.
std::vector<std::set<int>> verticals(const HamCycle& c) {
    std::vector<std::set<int>> out(c.base_order + 1);
    const auto n = c.vertices.size();
    for (std::size_t k = 0; k < n; ++k) {
        auto a = product_label(c.vertices[k], c.base_order);
        auto b = product_label(c.vertices[(k + 1) % n], c.base_order);
        if (a.base == b.base)
            out[a.base].insert(std::min(a.layer, b.layer));
    }
    return out;
}

std::set<int> residues(int layers, std::set<int> keep) {
    std::set<int> out;
    for (int j = 1; j < layers; ++j)
        if (keep.count(j % 4))
            out.insert(j);
    return out;
}

template <typename E>
ErrorKind kind_of(E&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Malformed;
}

void check_pm(const Graph& t, int n) {
    auto r = build_ham_pm(n, t);
    const Graph p = path_product(n, t).graph;
    REQUIRE(oracle::is_hamiltonian_sequence(p, r.cycle.vertices));
    CHECK(verify_cycle(p, r.cycle));
    auto v = verticals(r.cycle);
    for (Vertex x = 1; x <= t.order(); ++x) {
        CHECK(static_cast<int>(v[x].size()) == n - t.degree(x));
        CHECK(r.column_counts[x - 1] == n - t.degree(x));
    }
    auto typed = assign_types(*find_perfect_matching(t));
    CHECK(verify_edge_contract(r.cycle, t, typed, n, BuildMode::Matching));
}

void check_pf(const Graph& t, int n) {
    auto f = *find_p23_factor(t);
    auto r = build_ham_pf(n, t, f);
    const Graph p = path_product(n, t).graph;
    REQUIRE(oracle::is_hamiltonian_sequence(p, r.cycle.vertices));
    auto typed = assign_types(f);
    auto v = verticals(r.cycle);
    for (Vertex x = 1; x <= t.order(); ++x) {
        std::set<int> allowed;
        int delta = 1;
        switch (typed.type(x)) {
            case VertexType::B: allowed = residues(n, {0, 1, 2, 3}); break;
            case VertexType::L: allowed = residues(n, {0, 1, 3}); break;
            case VertexType::C: allowed = residues(n, {0, 2}); delta = 2; break;
            case VertexType::R: allowed = residues(n, {1, 2, 3}); break;
        }
        for (int j : v[x])
            CHECK(allowed.count(j));
        CHECK(static_cast<int>(v[x].size()) == static_cast<int>(allowed.size()) - t.degree(x) + delta);
    }
    CHECK(verify_edge_contract(r.cycle, t, typed, n, BuildMode::PathFactor));
}

}  // namespace

TEST_SUITE("ham_builder") {

TEST_CASE("column sets") {
    CHECK(column_set(VertexType::B, 6) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(column_set(VertexType::L, 10) == std::vector<int>{1, 3, 4, 5, 7, 8, 9});
    CHECK(column_set(VertexType::C, 10) == std::vector<int>{2, 4, 6, 8});
    CHECK(column_set(VertexType::R, 10) == std::vector<int>{1, 2, 3, 5, 6, 7, 9});
    CHECK(type_degree(VertexType::C) == 2);
    CHECK(type_degree(VertexType::L) == 1);
    CHECK(to_char(VertexType::R) == 'R');
}

TEST_CASE("lemma counts") {
    auto c10 = lemma41_counts(10);
    CHECK(c10.left_right == 5);
    CHECK(c10.right_center == 2);
    CHECK(c10.left_center == 2);
    auto c4 = lemma41_counts(4);
    CHECK(c4.left_right == 2);
    CHECK(c4.right_center == 1);
    CHECK(c4.left_center == 0);
    auto c6 = lemma41_counts(6);
    CHECK(c6.left_right == 3);
    CHECK(c6.right_center == 1);
    CHECK(c6.left_center == 1);
    CHECK(kind_of([] { lemma41_counts(7); }) == ErrorKind::OddLayers);
    CHECK(kind_of([] { lemma41_counts(2); }) == ErrorKind::TooFewLayers);
}

TEST_CASE("standard P2 cycle") {
    CHECK(standard_cycle_p2(2).canonical() == from_labels(2, 2, {{1, 1}, {2, 1}, {2, 2}, {1, 2}}).canonical());
    CHECK(standard_cycle_p2(3).canonical() ==
          from_labels(3, 2, {{1, 1}, {2, 1}, {3, 1}, {3, 2}, {2, 2}, {1, 2}}).canonical());
    auto c5 = standard_cycle_p2(5);
    CHECK(verify_cycle(path_product(5, Graph::path(2)).graph, c5));
    CHECK(verticals(c5)[1].size() == 4);
    CHECK(verticals(c5)[2].size() == 4);

    auto broken = c5;
    broken.vertices[3] = broken.vertices[1];
    CHECK_FALSE(verify_cycle(path_product(5, Graph::path(2)).graph, broken));
}

TEST_CASE("standard P3 cycle") {
    auto c4 = standard_cycle_p3(4);
    CHECK(c4.vertices == from_labels(4, 3,
                                     {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 1}, {4, 1}, {4, 2}, {4, 3}, {3, 3},
                                      {2, 3}, {1, 3}, {1, 2}})
                             .vertices);

    auto c6 = standard_cycle_p3(6);
    auto v = verticals(c6);
    CHECK(v[1].size() == 4);
    CHECK(v[2].size() == 2);
    CHECK(v[3].size() == 4);

    CHECK(kind_of([] { standard_cycle_p3(5); }) == ErrorKind::OddLayers);
    CHECK(kind_of([] { standard_cycle_p3(2); }) == ErrorKind::TooFewLayers);

    for (int n = 4; n <= 40; n += 2) {
        auto c = standard_cycle_p3(n);
        CHECK(oracle::is_hamiltonian_sequence(path_product(n, Graph::path(3)).graph, c.vertices));
        auto vv = verticals(c);
        CHECK(vv[1] == residues(n, {0, 1, 3}));
        CHECK(vv[2] == residues(n, {0, 2}));
        CHECK(vv[3] == residues(n, {1, 2, 3}));
    }
}

TEST_CASE("standard P3 cycle on other columns") {
    auto c = standard_cycle_p3(6, 5, 4, 8, 8);
    auto p = path_product(6, fixtures().t1).graph;
    CHECK(c.vertices.size() == 18);
    for (std::size_t k = 0; k < c.vertices.size(); ++k)
        CHECK(p.adjacent(c.vertices[k], c.vertices[(k + 1) % c.vertices.size()]));
}

TEST_CASE("types") {
    auto p2 = assign_types(PathFactor{{{1, 2}}});
    CHECK(p2.type(1) == VertexType::B);
    CHECK(p2.type(2) == VertexType::B);

    auto t1 = assign_types(PathFactor{{{1, 2, 6}, {3, 7}, {5, 4, 8}}});
    std::string tags;
    for (Vertex v = 1; v <= 8; ++v)
        tags += to_char(t1.type(v));
    CHECK(tags == "LCBCLRBR");
    CHECK(t1.delta(4) == 2);
    CHECK(t1.delta(5) == 1);
}

TEST_CASE("peel order") {
    auto p4 = peel_order(Graph::path(4), PathFactor{{{1, 2}, {3, 4}}});
    CHECK(p4.order == std::vector<std::size_t>{0, 1});
    CHECK(p4.contracted.size() == 1);

    auto t1 = peel_order(fixtures().t1, PathFactor{{{1, 2, 6}, {3, 7}, {5, 4, 8}}});
    CHECK(t1.order == std::vector<std::size_t>{0, 1, 2});
    CHECK(t1.contracted == Graph::path(3));

    auto one = peel_order(Graph::path(3), PathFactor{{{1, 2, 3}}});
    CHECK(one.order == std::vector<std::size_t>{0});

    CHECK(kind_of([] { peel_order(Graph::cycle(4), PathFactor{{{1, 2}, {3, 4}}}); }) == ErrorKind::NotTree);
    CHECK(kind_of([] { peel_order(Graph::path(4), PathFactor{{{1, 3}, {2, 4}}}); }) == ErrorKind::InvalidFactor);
}

TEST_CASE("peel order removes a leaf each step") {
    for (const Graph& t : enumerate_trees(9)) {
        auto f = find_p23_factor(t);
        if (!f)
            continue;
        auto p = peel_order(t, *f);
        std::vector<char> gone(f->components.size(), 0);
        for (std::size_t c : p.order) {
            int live_neighbours = 0;
            for (Vertex y : p.contracted.neighbors(static_cast<Vertex>(c) + 1))
                live_neighbours += !gone[y - 1];
            CHECK(live_neighbours <= 1);
            gone[c] = 1;
        }
    }
}

TEST_CASE("matching construction examples") {
    auto p2 = build_ham_pm(5, Graph::path(2));
    CHECK(p2.column_counts == std::vector<int>{4, 4});
    CHECK(p2.cycle.canonical() == standard_cycle_p2(5).canonical());

    auto p4 = build_ham_pm(2, Graph::path(4));
    CHECK(p4.cycle.vertices.size() == 8);
    CHECK(p4.column_counts == std::vector<int>{1, 0, 0, 1});

    const Graph star(6, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}});
    auto s = build_ham_pm(3, star, PathFactor{{{1, 4}, {2, 5}, {3, 6}}});
    CHECK(s.cycle.vertices.size() == 18);
    CHECK(s.column_counts[0] == 0);
    CHECK(verify_cycle(path_product(3, star).graph, s.cycle));

    CHECK(kind_of([] { build_ham_pm(2, fixtures().t1); }) == ErrorKind::TooFewLayers);
    CHECK(kind_of([] { build_ham_pm(4, Graph::star(3)); }) == ErrorKind::NoPerfectMatching);
}

TEST_CASE("path factor construction examples") {
    auto p3 = build_ham_pf(6, Graph::path(3));
    CHECK(p3.column_counts == std::vector<int>{4, 2, 4});
    CHECK(p3.cycle.canonical() == standard_cycle_p3(6).canonical());

    auto p2 = build_ham_pf(4, Graph::path(2));
    CHECK(p2.cycle.canonical() == standard_cycle_p2(4).canonical());

    auto t1 = build_ham_pf(10, fixtures().t1);
    CHECK(t1.cycle.vertices.size() == 80);
    check_pf(fixtures().t1, 10);

    CHECK(kind_of([] { build_ham_pf(11, fixtures().t1); }) == ErrorKind::OddLayers);
    CHECK(kind_of([] { build_ham_pf(8, fixtures().t1); }) == ErrorKind::TooFewLayers);
    CHECK(kind_of([] { build_ham_pf(10, Graph::star(3)); }) == ErrorKind::NoP23Factor);
}

TEST_CASE("edge contract rejects the wrong contract") {
    auto c = standard_cycle_p2(5);
    TypedFactor typed{PathFactor{{{1, 2}}}, {VertexType::C, VertexType::B}};
    CHECK_FALSE(verify_edge_contract(c, Graph::path(2), typed, 5, BuildMode::PathFactor));

    auto c6 = standard_cycle_p2(6);
    CHECK_FALSE(verify_edge_contract(c6, Graph::path(2), typed, 6, BuildMode::PathFactor));
    TypedFactor b{PathFactor{{{1, 2}}}, {VertexType::B, VertexType::B}};
    CHECK(verify_edge_contract(c6, Graph::path(2), b, 6, BuildMode::PathFactor));
    CHECK(verify_edge_contract(build_ham_pm(5, Graph::path(2)).cycle, Graph::path(2), b, 5, BuildMode::Matching));
}

TEST_CASE("main builder") {
    auto k4 = build_ham_main(3, Graph::complete(4));
    CHECK(k4.cycle.vertices.size() == 12);
    CHECK(k4.used == BuildMode::Matching);
    CHECK(verify_cycle(path_product(3, Graph::complete(4)).graph, k4.cycle));

    auto fig4 = build_ham_main(10, fixtures().fig4, BuildMode::PathFactor);
    CHECK(fig4.cycle.vertices.size() == 60);
    CHECK(fig4.used == BuildMode::PathFactor);
    CHECK(oracle::is_hamiltonian_sequence(path_product(10, fixtures().fig4).graph, fig4.cycle.vertices));

    try {
        build_ham_main(4, Graph::star(3));
        FAIL("expected NoFactor");
    } catch (const NoFactorError& e) {
        REQUIRE(e.certificate);
        CHECK(e.certificate->witness == std::vector<Vertex>{1});
    }

    try {
        build_ham_main(1, Graph::path(6));
        FAIL("expected LayerBound");
    } catch (const LayerBoundError& e) {
        CHECK(e.required == 2);
    }
    try {
        build_ham_main(8, fixtures().fig4, BuildMode::PathFactor);
        FAIL("expected LayerBound");
    } catch (const LayerBoundError& e) {
        CHECK(e.required == 10);
    }
    CHECK(kind_of([] { build_ham_main(4, Graph(4, {{1, 2}, {3, 4}})); }) == ErrorKind::Disconnected);
}

TEST_CASE("builder is deterministic") {
    auto a = build_ham_pf(10, fixtures().t1);
    auto b = build_ham_pf(10, fixtures().t1);
    CHECK(a.cycle == b.cycle);
    CHECK(build_ham_main(10, fixtures().fig4).cycle == build_ham_main(10, fixtures().fig4).cycle);
}

TEST_CASE("matching sweep, trees up to order 8") {
    for (const Graph& t : enumerate_trees(8)) {
        if (!find_perfect_matching(t))
            continue;
        const int d = max_degree(t);
        for (int n = std::max(2, d); n <= d + 3; ++n)
            check_pm(t, n);
    }
}

TEST_CASE("path factor sweep, trees up to order 6") {
    for (const Graph& t : enumerate_trees(6)) {
        if (!find_p23_factor(t))
            continue;
        const int d = max_degree(t);
        for (int n : {std::max(4, 4 * d - 2), 4 * d})
            check_pf(t, n);
    }
}

}
