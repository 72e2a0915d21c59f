#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "prodham/cycle.hpp"
#include "prodham/graph.hpp"

namespace prodham {

// Edge-list text: "order edgecount" then one "u v" pair per line, 1-indexed.
// Lines starting with '#' are ignored on input.
Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g);

/// Throws Malformed when the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

struct DotOptions {
    std::string name = "G";
    /// Vertex label; defaults to the vertex number.
    std::function<std::string(Vertex)> label;
    /// Edges drawn bold; when non-empty the remaining edges are drawn thin and gray.
    std::vector<Edge> bold;
};

std::string emit_dot(const Graph& g, const DotOptions& options = {});

/// DOT for P_n □ H with "i_v" labels and the cycle edges bold.
std::string emit_cycle_dot(const Graph& product, const HamCycle& cycle);

// Cycle text: "n |V(H)|" then the cyclic sequence as "i_v" tokens.
std::string emit_cycle(const HamCycle& cycle);
HamCycle parse_cycle(std::string_view text);

}  // namespace prodham
