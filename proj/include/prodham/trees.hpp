#pragma once

#include <string>
#include <vector>

#include "prodham/graph.hpp"

namespace prodham {

constexpr int kTreeOrderCap = 12;

/// AHU encoding of the tree rooted at its centroid (the smaller encoding
/// when there are two centroids). Equal strings iff isomorphic trees.
std::string tree_canonical_form(const Graph& tree);

/// Isomorphic copy labelled in breadth-first order from the canonical root,
/// children sorted by encoding.
Graph canonical_tree(const Graph& tree);

/// One representative per isomorphism class of trees of exactly this order,
/// sorted by canonical form. Throws BudgetExceeded above kTreeOrderCap.
std::vector<Graph> trees_of_order(int order);

/// Trees of orders 2..max_order, grouped by order.
std::vector<Graph> enumerate_trees(int max_order);

/// Canonical form of a connected graph with exactly one cycle: the cyclic
/// sequence of rooted encodings hanging off the cycle, minimal over
/// rotations and reflections.
std::string unicyclic_canonical_form(const Graph& g);

/// Non-isomorphic graphs obtained from the given trees by adding one edge,
/// sorted by canonical form.
std::vector<Graph> unicyclic_extensions(const std::vector<Graph>& trees);

}  // namespace prodham
