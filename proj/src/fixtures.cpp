#include "prodham/fixtures.hpp"

#include <algorithm>
#include <cctype>

namespace prodham {

Fixtures fixtures() {
    return {
        Graph(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {3, 7}, {4, 8}}),
        Graph(6, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 6}}),
        Graph(7, {{1, 2}, {2, 4}, {4, 6}, {6, 5}, {5, 3}, {3, 1}, {2, 3}, {1, 7}, {7, 6}}),
    };
}

std::vector<NamedGraph> Fixtures::all() const {
    return {
        {"T1", t1, "caterpillar with a path factor; P4 x T1 is 1-tough and not Hamiltonian"},
        {"fig4", fig4, "bipartite graph with a path factor; P5 x fig4 is Hamiltonian"},
        {"fig1", fig1, "1-tough non-Hamiltonian graph on 7 vertices"},
    };
}

std::optional<Graph> fixture(std::string_view name) {
    auto lower = [](std::string_view s) {
        std::string out(s);
        std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
        return out;
    };
    for (auto& named : fixtures().all())
        if (lower(named.name) == lower(name))
            return named.graph;
    return std::nullopt;
}

}  // namespace prodham
