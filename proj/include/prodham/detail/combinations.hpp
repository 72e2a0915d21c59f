#pragma once

#include <cstdint>
#include <vector>

namespace prodham::detail {

/// Visits every k-subset of {0..n-1} as a bitmask, k ascending and
/// lexicographic within each k. Stops early when `visit` returns true.
template <class Visit>
bool for_each_subset_by_size(int n, Visit&& visit) {
    std::vector<int> idx;
    for (int k = 0; k <= n; ++k) {
        idx.resize(k);
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        while (true) {
            std::uint64_t s = 0;
            for (int i : idx)
                s |= std::uint64_t{1} << i;
            if (visit(s, k))
                return true;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

/// Neighbourhood bitmasks, vertex v at index v - 1. Needs order <= 64.
template <class G>
std::vector<std::uint64_t> neighbor_masks(const G& g) {
    std::vector<std::uint64_t> nbr(g.order(), 0);
    for (int v = 1; v <= g.order(); ++v)
        for (int w : g.neighbors(v))
            nbr[v - 1] |= std::uint64_t{1} << (w - 1);
    return nbr;
}

/// Number of connected components of the subgraph induced by `alive`.
inline int mask_components(const std::vector<std::uint64_t>& nbr, std::uint64_t alive) {
    int count = 0;
    while (alive) {
        std::uint64_t frontier = alive & -alive, seen = frontier;
        while (frontier) {
            int v = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            std::uint64_t fresh = nbr[v] & alive & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        alive &= ~seen;
        ++count;
    }
    return count;
}

inline std::vector<int> mask_to_vertices(std::uint64_t s) {
    std::vector<int> out;
    while (s) {
        out.push_back(__builtin_ctzll(s) + 1);
        s &= s - 1;
    }
    return out;
}

}  // namespace prodham::detail
