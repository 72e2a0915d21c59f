#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prodham/graph.hpp"

namespace prodham {

struct NamedGraph {
    std::string name;
    Graph graph;
    std::string note;
};

struct Fixtures {
    /// Caterpillar on 8 vertices: spine 1-2-3-4-5 with pendants 6, 7, 8 at
    /// 2, 3, 4. P4 □ T1 is 1-tough and not Hamiltonian.
    Graph t1;
    /// 6 vertices, E = {12,23,34,25,36}. P5 □ fig4 is Hamiltonian.
    Graph fig4;
    /// 7 vertices: hexagon 1-2-4-6-5-3-1, chord 2-3, path 1-7-6. 1-tough
    /// and not Hamiltonian.
    Graph fig1;

    std::vector<NamedGraph> all() const;
};

Fixtures fixtures();

/// Lookup by name ("T1", "fig4", "fig1"), case-insensitive.
std::optional<Graph> fixture(std::string_view name);

}  // namespace prodham
