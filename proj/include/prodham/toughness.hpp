#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prodham/budget.hpp"
#include "prodham/graph.hpp"

namespace prodham {

struct RemovalStats {
    int components = 0;  ///< c(G - S)
    int isolated = 0;    ///< i(G - S)
};

RemovalStats removal_stats(const Graph& g, std::span<const Vertex> removed);

/// Cut S together with c(G - S).
struct CutWitness {
    std::vector<Vertex> cut;
    int components = 0;

    /// "S = {v1,...}; c(G-S) = k; |S| = m"
    std::string to_text() const;

    friend bool operator==(const CutWitness&, const CutWitness&) = default;
};

/// Exact toughness: a reduced fraction, or infinite for complete graphs.
class ToughnessValue {
public:
    static ToughnessValue infinite() { return ToughnessValue(true, 0, 1); }
    static ToughnessValue ratio(long long num, long long den);

    bool is_infinite() const { return infinite_; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    /// Three-way comparison against the integer k.
    int compare(long long k) const;
    /// "Infinite", "p/q" or "p" when q = 1.
    std::string to_string() const;

    friend bool operator==(const ToughnessValue&, const ToughnessValue&) = default;

private:
    ToughnessValue(bool inf, long long num, long long den) : infinite_(inf), num_(num), den_(den) {}

    bool infinite_;
    long long num_;
    long long den_;
};

struct ToughnessResult {
    ToughnessValue value = ToughnessValue::infinite();
    std::optional<CutWitness> witness;  ///< empty iff value is infinite
};

constexpr int kToughnessOrderCap = 20;

/// min |S| / c(G - S) over cut sets by exhaustive subset scan. The witness
/// is the smallest minimizer, lexicographically least among those.
/// Throws BudgetExceeded above kToughnessOrderCap.
ToughnessResult toughness_exact(const Graph& g);

enum class Verdict { Yes, No, Unknown };

std::string_view to_string(Verdict v);

struct OneToughResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<CutWitness> witness;  ///< set iff verdict is No
    std::uint64_t nodes = 0;            ///< search nodes visited
};

/// Decides t(G) >= 1 by branch and bound over keep / remove decisions,
/// maximizing c(G - S) - |S|. Graphs above 64 vertices yield Unknown.
OneToughResult is_one_tough(const Graph& g, const SearchBudget& budget = {});

/// Cut of P_n □ H with more components than vertices, for bipartite H
/// without a path factor. Throws PreconditionFailed when H is not bipartite
/// or the product is complete, HasPathFactor when H has a path factor.
CutWitness witness_bipartite_product(int layers, const Graph& h);

/// Column {u_v : u in V(G1)} at the smallest maximum-degree vertex v of T,
/// cutting G1 □ T into Δ(T) pieces. Throws PreconditionFailed unless
/// Δ(T) > |V(G1)|, G1 is connected and T is a tree.
CutWitness witness_max_degree(const Graph& g1, const Graph& tree);

}  // namespace prodham
