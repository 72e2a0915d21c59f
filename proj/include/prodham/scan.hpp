#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prodham/cycle.hpp"
#include "prodham/graph.hpp"
#include "prodham/oracle.hpp"

namespace prodham {

struct ScanOptions {
    double instance_seconds = 10.0;
    std::optional<double> total_seconds;
    int workers = 1;
    std::size_t start_index = 0;
    /// Called once per finished instance with its log line.
    std::function<void(const std::string&)> progress;
};

struct ScanEntry {
    std::size_t index = 0;
    std::string key;  ///< canonical form of the base graph
    Graph graph;
    int layers = 0;
    bool reference = false;  ///< fixed example outside the enumerated family
    OracleStatus verdict = OracleStatus::Unknown;
    std::optional<HamCycle> cycle;
    double seconds = 0.0;
};

struct ScanReport {
    std::string name;
    nlohmann::json parameters;
    std::size_t total_instances = 0;
    std::vector<ScanEntry> entries;         ///< examined instances, by index
    std::vector<std::size_t> candidates;    ///< indices of non-Hamiltonian entries
    bool complete = false;
    std::size_t next_index = 0;             ///< resume point for a truncated run

    std::size_t examined() const { return entries.size(); }
    std::string log() const;
    nlohmann::json summary() const;
};

/// Connected graphs with max degree k and a path factor (trees up to
/// max_order, then trees plus one edge), each tested for a Hamiltonian cycle
/// of P_{4k-4} □ G. Non-Hamiltonian results are listed as candidates and
/// re-verified. Throws PreconditionFailed when k < 3.
ScanReport scan_conjecture1(int k, int max_order, const ScanOptions& options = {});

/// Connected bipartite graphs (trees and trees plus one edge) of order up to
/// max_h_order with a path factor and balanced sides, paired with every odd
/// n in [4Δ - 2, max_n]; the instance (fig4, 5) is always included as a
/// reference. A non-Hamiltonian product is a candidate counterexample.
ScanReport scan_conjecture2(int max_h_order, int max_n, const ScanOptions& options = {});

}  // namespace prodham
