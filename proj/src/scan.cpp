#include "prodham/scan.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "prodham/errors.hpp"
#include "prodham/factor.hpp"
#include "prodham/fixtures.hpp"
#include "prodham/product.hpp"
#include "prodham/trees.hpp"

namespace prodham {

namespace {

using Clock = std::chrono::steady_clock;

struct Instance {
    Graph graph;
    int layers;
    std::string key;
    bool reference;
};

std::string describe(const ScanEntry& e) {
    std::ostringstream out;
    out << "[" << e.index << "] n=" << e.layers << " order=" << e.graph.order() << " edges=";
    for (const Edge& ed : e.graph.edges())
        out << ed.u << "-" << ed.v << ",";
    out << " key=" << e.key << (e.reference ? " (reference)" : "") << " verdict=" << to_string(e.verdict);
    return out.str();
}

ScanReport run_scan(std::string name, nlohmann::json params, const std::vector<Instance>& instances,
                    const ScanOptions& options) {
    ScanReport report;
    report.name = std::move(name);
    report.parameters = std::move(params);
    report.total_instances = instances.size();

    const std::size_t first = std::min(options.start_index, instances.size());
    std::vector<std::optional<ScanEntry>> done(instances.size());
    std::optional<Clock::time_point> deadline;
    if (options.total_seconds)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*options.total_seconds));
    SearchBudget per_instance{std::chrono::duration<double>(options.instance_seconds), 1};

    std::atomic<std::size_t> next{first};
    std::mutex mu;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
            if (deadline && Clock::now() > *deadline)
                break;
            const Instance& inst = instances[i];
            ScanEntry e{i, inst.key, inst.graph, inst.layers, inst.reference, OracleStatus::Unknown, std::nullopt, 0.0};
            auto start = Clock::now();
            auto r = brute_hamiltonian(path_product(inst.layers, inst.graph).graph, per_instance);
            e.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            e.verdict = r.status;
            if (r.status == OracleStatus::Found)
                e.cycle = HamCycle{r.cycle.vertices, inst.layers, inst.graph.order()};
            std::lock_guard lock(mu);
            if (options.progress)
                options.progress(describe(e));
            done[i] = std::move(e);
        }
    };
    const int workers = std::max(1, options.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    report.next_index = first;
    while (report.next_index < instances.size() && done[report.next_index])
        ++report.next_index;
    report.complete = report.next_index == instances.size();
    for (auto& e : done)
        if (e) {
            if (e->verdict == OracleStatus::None) {
                auto again = brute_hamiltonian(path_product(e->layers, e->graph).graph);
                if (again.status != OracleStatus::None)
                    throw std::logic_error("scan candidate did not re-verify");
                report.candidates.push_back(e->index);
            }
            report.entries.push_back(std::move(*e));
        }
    return report;
}

bool has_path_factor(const Graph& g) { return find_p23_factor(g).has_value(); }

}  // namespace

std::string ScanReport::log() const {
    std::ostringstream out;
    out << "# scan " << name << " " << parameters.dump() << "\n";
    for (const auto& e : entries) {
        out << describe(e);
        out << " time=" << e.seconds << "s";
        if (e.verdict == OracleStatus::None)
            out << (name == "conjecture2" ? "  *** NON-HAMILTONIAN: refutes the conjecture ***"
                                          : "  *** NON-HAMILTONIAN candidate ***");
        out << "\n";
    }
    out << "# examined " << examined() << " of " << total_instances << ", candidates " << candidates.size()
        << ", status " << (complete ? "complete" : "truncated") << ", next_index " << next_index << "\n";
    return out.str();
}

nlohmann::json ScanReport::summary() const {
    nlohmann::json j;
    j["scan"] = name;
    j["parameters"] = parameters;
    j["total_instances"] = total_instances;
    j["examined"] = examined();
    j["status"] = complete ? "complete" : "truncated";
    j["next_index"] = next_index;
    j["candidates"] = candidates;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json edges = nlohmann::json::array();
        for (const Edge& ed : e.graph.edges())
            edges.push_back({ed.u, ed.v});
        list.push_back({{"index", e.index},
                        {"n", e.layers},
                        {"order", e.graph.order()},
                        {"edges", edges},
                        {"key", e.key},
                        {"reference", e.reference},
                        {"verdict", std::string(to_string(e.verdict))}});
    }
    j["instances"] = list;
    return j;
}

ScanReport scan_conjecture1(int k, int max_order, const ScanOptions& options) {
    if (k < 3)
        throw Error(ErrorKind::PreconditionFailed, "conjecture scan needs k >= 3");
    const int layers = 4 * k - 4;
    const int cap = std::min(max_order, kTreeOrderCap);
    std::vector<Instance> instances;
    std::vector<std::vector<Graph>> trees(cap + 1);
    for (int n = 2; n <= cap; ++n) {
        trees[n] = trees_of_order(n);
        for (const Graph& t : trees[n])
            if (max_degree(t) == k && has_path_factor(t))
                instances.push_back({t, layers, "T" + tree_canonical_form(t), false});
    }
    for (int n = 3; n <= cap; ++n)
        for (const Graph& g : unicyclic_extensions(trees[n]))
            if (max_degree(g) == k && has_path_factor(g))
                instances.push_back({g, layers, unicyclic_canonical_form(g), false});
    nlohmann::json params{{"k", k},
                          {"layers", layers},
                          {"max_order", max_order},
                          {"instance_seconds", options.instance_seconds},
                          {"start_index", options.start_index}};
    return run_scan("conjecture1", std::move(params), instances, options);
}

ScanReport scan_conjecture2(int max_h_order, int max_n, const ScanOptions& options) {
    const int cap = std::min(max_h_order, kTreeOrderCap);
    std::vector<Graph> bases;
    for (int n = 2; n <= cap; ++n) {
        auto trees = trees_of_order(n);
        bases.insert(bases.end(), trees.begin(), trees.end());
    }
    for (int n = 4; n <= cap; ++n)
        for (Graph& g : unicyclic_extensions(trees_of_order(n)))
            if (bipartition(g))
                bases.push_back(std::move(g));

    std::vector<Instance> instances;
    instances.push_back({fixtures().fig4, 5, "T" + tree_canonical_form(fixtures().fig4), true});
    for (const Graph& g : bases) {
        auto bip = bipartition(g);
        if (!bip || !bip->balanced() || !has_path_factor(g))
            continue;
        const std::string key = is_tree(g) ? "T" + tree_canonical_form(g) : unicyclic_canonical_form(g);
        int lo = std::max(1, 4 * max_degree(g) - 2);
        if (lo % 2 == 0)
            ++lo;
        for (int n = lo; n <= max_n; n += 2)
            instances.push_back({g, n, key, false});
    }
    nlohmann::json params{{"max_h_order", max_h_order},
                          {"max_n", max_n},
                          {"instance_seconds", options.instance_seconds},
                          {"start_index", options.start_index}};
    return run_scan("conjecture2", std::move(params), instances, options);
}

}  // namespace prodham
