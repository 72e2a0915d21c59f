#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prodham/cycle.hpp"
#include "prodham/errors.hpp"
#include "prodham/factor.hpp"
#include "prodham/graph.hpp"

namespace prodham {

// Vertical edges of column v in P_n □ T are indexed by j in 1..n-1, where
// edge j joins j_v and (j+1)_v. B_v holds all of them; L_v, C_v and R_v keep
// the indices with j mod 4 in {0,1,3}, {0,2} and {1,2,3} respectively.

/// Role of a tree vertex inside its factor component: B for both ends of a
/// P2, L / C / R for the first end, middle and last end of a P3.
enum class VertexType : std::uint8_t { B, L, C, R };

char to_char(VertexType x);

/// Degree of a vertex of this type inside its component (2 for C, else 1).
constexpr int type_degree(VertexType x) { return x == VertexType::C ? 2 : 1; }

constexpr bool in_column_set(VertexType x, int j) {
    switch (x) {
        case VertexType::B: return true;
        case VertexType::L: return j % 4 != 2;
        case VertexType::C: return j % 4 == 0 || j % 4 == 2;
        case VertexType::R: return j % 4 != 0;
    }
    return false;
}

/// Indices j in 1..n-1 belonging to the column set of type x.
std::vector<int> column_set(VertexType x, int layers);

struct Lemma41Counts {
    int left_right = 0;    ///< |L ∩ R|
    int right_center = 0;  ///< |R ∩ C|
    int left_center = 0;   ///< |L ∩ C|
};

/// Exact intersection sizes on 1..n-1. Requires even n >= 4 (OddLayers / TooFewLayers).
Lemma41Counts lemma41_counts(int layers);

struct TypedFactor {
    PathFactor factor;
    std::vector<VertexType> types;  ///< types[v - 1]

    VertexType type(Vertex v) const { return types[v - 1]; }
    int delta(Vertex v) const { return type_degree(type(v)); }
};

/// P2 ends become B; in a P3 the middle is C and the end with the smaller
/// label is L, the other R.
TypedFactor assign_types(const PathFactor& f);

/// Leaf-removal order of the contracted factor tree T_F, whose nodes are the
/// factor components (node k + 1 is components[k]) joined when a tree edge
/// connects them. The smallest-index leaf goes first at every step.
struct PeelOrder {
    std::vector<std::size_t> order;
    Graph contracted;
};

/// Throws NotTree or InvalidFactor.
PeelOrder peel_order(const Graph& tree, const PathFactor& f);

/// {1_u 1_w} ∪ B_u ∪ B_w ∪ {n_u n_w}; needs n >= 2.
HamCycle standard_cycle_p2(int layers, Vertex u = 1, Vertex w = 2, int base_order = 2);

/// Cycle of P_n □ P3 on the path u - v - w using L_u, C_v and R_w as its
/// vertical edges. Needs even n >= 4 (OddLayers / TooFewLayers).
HamCycle standard_cycle_p3(int layers, Vertex u = 1, Vertex v = 2, Vertex w = 3, int base_order = 3);

struct BuildResult {
    HamCycle cycle;
    std::vector<int> column_counts;  ///< |H ∩ B_v| at index v - 1
};

/// Cycle of P_n □ T with exactly n - deg_T(v) edges of B_v at every column.
/// Requires n >= max(2, Δ(T)) (TooFewLayers) and a perfect matching of T.
BuildResult build_ham_pm(int layers, const Graph& tree, const std::optional<PathFactor>& matching = {});

/// Cycle of P_n □ T whose column v uses only edges of X_v (X the type of v),
/// exactly |X_v| - deg_T(v) + δ_X of them. Requires even n >= 4Δ(T) - 2.
BuildResult build_ham_pf(int layers, const Graph& tree, const std::optional<PathFactor>& factor = {});

enum class BuildMode { Auto, Matching, PathFactor };

struct MainResult {
    HamCycle cycle;
    BuildMode used = BuildMode::Auto;
    PathFactor factor;
    Graph tree;
};

class NoFactorError : public Error {
public:
    NoFactorError(const std::string& what, std::optional<FactorCertificate> cert)
        : Error(ErrorKind::NoFactor, what), certificate(std::move(cert)) {}

    std::optional<FactorCertificate> certificate;
};

class LayerBoundError : public Error {
public:
    LayerBoundError(const std::string& what, int required_layers)
        : Error(ErrorKind::LayerBound, what), required(required_layers) {}

    int required;
};

/// Hamiltonian cycle of P_n □ G2 for connected G2 when either
/// (a) G2 has a perfect matching and n >= Δ(G2), or
/// (b) G2 has a path factor, n is even and n >= 4Δ(G2) - 2.
/// Auto tries (a) first. The cycle is validated before it is returned.
MainResult build_ham_main(int layers, const Graph& g2, BuildMode mode = BuildMode::Auto);

/// |H ∩ B_v| for every base vertex v.
std::vector<int> column_counts(const HamCycle& cycle);

/// Per-column contract of the matching (pm) or typed path-factor (pf)
/// construction. `mode` must be Matching or PathFactor.
bool verify_edge_contract(const HamCycle& cycle, const Graph& tree, const TypedFactor& typed, int layers,
                          BuildMode mode);

}  // namespace prodham
