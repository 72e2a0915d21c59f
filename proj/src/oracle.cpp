#include "prodham/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace prodham {

std::string_view to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::Found: return "found";
        case OracleStatus::None: return "none";
        case OracleStatus::Unknown: return "unknown";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class CycleSearch {
public:
    CycleSearch(const Graph& g, const SearchBudget& budget)
        : g_(g), n_(g.order()), visited_(n_ + 1, 0), free_(n_ + 1, 0), mark_(n_ + 1, 0) {
        if (budget.time_limit)
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*budget.time_limit);
        for (Vertex v = 1; v <= n_; ++v)
            free_[v] = g.degree(v);
    }

    CycleSearchResult run() {
        CycleSearchResult r;
        r.status = OracleStatus::None;
        if (n_ < 3 || !is_connected(g_))
            return r;
        for (Vertex v = 1; v <= n_; ++v)
            if (g_.degree(v) < 2)
                return r;
        if (auto bip = bipartition(g_); bip && !bip->balanced())
            return r;

        visit(1);
        bool found = dfs();
        r.nodes = nodes_;
        if (found) {
            r.status = OracleStatus::Found;
            r.cycle = HamCycle{path_, 1, n_};
        } else if (timed_out_) {
            r.status = OracleStatus::Unknown;
        }
        return r;
    }

private:
    static constexpr Vertex kStart = 1;

    void visit(Vertex v) {
        visited_[v] = 1;
        path_.push_back(v);
        for (Vertex w : g_.neighbors(v))
            --free_[w];
    }

    void unvisit(Vertex v) {
        visited_[v] = 0;
        path_.pop_back();
        for (Vertex w : g_.neighbors(v))
            ++free_[w];
    }

    // Neighbours of x that can still sit next to it on the cycle.
    int usable(Vertex x, Vertex end) const {
        int count = free_[x];
        if (g_.adjacent(x, end))
            ++count;
        if (end != kStart && g_.adjacent(x, kStart))
            ++count;
        return count;
    }

    bool dfs() {
        if ((++nodes_ & 1023) == 1 && deadline_ && Clock::now() >= *deadline_)
            timed_out_ = true;
        if (timed_out_)
            return false;

        const Vertex end = path_.back();
        const int remaining = n_ - static_cast<int>(path_.size());
        if (remaining == 0)
            return g_.adjacent(end, kStart);

        Vertex forced = 0;
        int closers = 0;
        for (Vertex x = 1; x <= n_; ++x) {
            if (visited_[x])
                continue;
            const int u = usable(x, end);
            if (u < 2)
                return false;
            if (u > 2 || end == kStart)
                continue;
            const bool at_end = g_.adjacent(x, end);
            const bool at_start = g_.adjacent(x, kStart);
            if (at_end) {
                if (forced)
                    return false;
                forced = x;
            }
            if (at_start) {
                if (at_end && remaining > 1)
                    return false;
                ++closers;
            }
        }
        if (closers > 1 || (end != kStart && !forced_edges_ok(end, remaining)) || !reachable(end))
            return false;

        for (Vertex w : g_.neighbors(end)) {
            if (visited_[w] || (forced && w != forced))
                continue;
            visit(w);
            if (dfs())
                return true;
            unvisit(w);
            if (timed_out_)
                return false;
        }
        return false;
    }

    // Edges at vertices with exactly two usable neighbours are forced. With
    // the path contracted to one node they must form disjoint paths, or the
    // closing cycle itself.
    bool forced_edges_ok(Vertex end, int remaining) {
        forced_.clear();
        for (Vertex x = 1; x <= n_; ++x) {
            if (visited_[x] || usable(x, end) != 2)
                continue;
            for (Vertex w : g_.neighbors(x))
                if (!visited_[w] || w == end || w == kStart)
                    forced_.emplace_back(x, w);
        }
        std::sort(forced_.begin(), forced_.end());
        forced_.erase(std::unique(forced_.begin(), forced_.end()), forced_.end());

        const Vertex hub = kStart;  // the path, contracted
        auto node = [&](Vertex v) { return v == end ? hub : v; };
        std::fill(count_.begin(), count_.end(), 0);
        std::iota(root_.begin(), root_.end(), 0);
        int end_edges = 0, start_edges = 0;
        bool cycle = false;
        for (const Edge& e : forced_) {
            end_edges += e.u == end || e.v == end;
            start_edges += e.u == kStart || e.v == kStart;
            Vertex a = node(e.u), b = node(e.v);
            if (a != hub && ++count_[a] > 2)
                return false;
            if (b != hub && ++count_[b] > 2)
                return false;
            Vertex ra = find(a), rb = find(b);
            if (ra == rb)
                cycle = true;
            else
                root_[ra] = rb;
        }
        if (end_edges > 1 || start_edges > 1)
            return false;
        return !cycle || static_cast<int>(forced_.size()) == remaining + 1;
    }

    Vertex find(Vertex v) {
        while (root_[v] != v)
            v = root_[v] = root_[root_[v]];
        return v;
    }

    // Unvisited vertices all reachable from the path end through unvisited
    // vertices, and the start still has an unvisited neighbour.
    bool reachable(Vertex end) {
        ++epoch_;
        stack_.clear();
        stack_.push_back(end);
        mark_[end] = epoch_;
        int reached = 0;
        while (!stack_.empty()) {
            Vertex v = stack_.back();
            stack_.pop_back();
            for (Vertex w : g_.neighbors(v))
                if (!visited_[w] && mark_[w] != epoch_) {
                    mark_[w] = epoch_;
                    ++reached;
                    stack_.push_back(w);
                }
        }
        if (reached != n_ - static_cast<int>(path_.size()))
            return false;
        if (end == kStart)
            return true;
        auto nbrs = g_.neighbors(kStart);
        return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return !visited_[w]; });
    }

    const Graph& g_;
    int n_;
    std::vector<char> visited_;
    std::vector<int> free_;  // unvisited neighbours
    std::vector<unsigned> mark_;
    unsigned epoch_ = 0;
    std::vector<Vertex> stack_;
    std::vector<Vertex> path_;
    std::vector<Edge> forced_;
    std::vector<int> count_ = std::vector<int>(n_ + 1, 0);
    std::vector<Vertex> root_ = std::vector<Vertex>(n_ + 1, 0);
    std::optional<Clock::time_point> deadline_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

}  // namespace

CycleSearchResult brute_hamiltonian(const Graph& g, const SearchBudget& budget) {
    return CycleSearch(g, budget).run();
}

PathSearchResult brute_traceable(const Graph& g, const SearchBudget& budget) {
    PathSearchResult r;
    const int n = g.order();
    if (n == 1) {
        r.status = OracleStatus::Found;
        r.path = {1};
        return r;
    }
    auto edges = g.edges();
    for (Vertex v = 1; v <= n; ++v)
        edges.emplace_back(v, n + 1);
    auto cyc = brute_hamiltonian(Graph(n + 1, edges), budget);
    r.status = cyc.status;
    r.nodes = cyc.nodes;
    if (cyc.status != OracleStatus::Found)
        return r;
    auto& seq = cyc.cycle.vertices;
    auto hub = std::find(seq.begin(), seq.end(), n + 1);
    r.path.assign(hub + 1, seq.end());
    r.path.insert(r.path.end(), seq.begin(), hub);
    return r;
}

}  // namespace prodham
