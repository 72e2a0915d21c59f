#include "prodham/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "prodham/errors.hpp"
#include "prodham/factor.hpp"
#include "prodham/fixtures.hpp"
#include "prodham/ham_builder.hpp"
#include "prodham/io.hpp"
#include "prodham/oracle.hpp"
#include "prodham/product.hpp"
#include "prodham/scan.hpp"
#include "prodham/toughness.hpp"

namespace prodham {

namespace {

using json = nlohmann::json;

struct Options {
    int n = 0;
    std::string graph;
    std::string cycle;
    std::string mode = "auto";
    std::string kind = "p23";
    double budget_seconds = 60.0;
    std::optional<double> total_seconds;
    int workers = 1;
    bool json = false;
    bool one_tough = false;
    std::string dot;
    std::string out;
    int conjecture = 1;
    int k = 3;
    int max_order = 8;
    int max_h = 6;
    int max_n = 13;
    std::size_t start_index = 0;
};

// Failure with a ready-made payload, raised by the command handlers.
struct CommandFailure {
    int code;
    json payload;
    std::string text;
};

Graph load_graph(const std::string& spec) {
    constexpr std::string_view prefix = "fixture:";
    if (spec.starts_with(prefix)) {
        if (auto g = fixture(spec.substr(prefix.size())))
            return *g;
        throw Error(ErrorKind::Malformed, "unknown fixture '" + spec.substr(prefix.size()) + "'");
    }
    return read_graph_file(spec);
}

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges)
        out.push_back({e.u, e.v});
    return out;
}

json components_json(const PathFactor& f) { return f.components; }

std::string components_text(const PathFactor& f) {
    std::string s;
    for (const auto& c : f.components) {
        s += s.empty() ? "(" : " (";
        for (std::size_t i = 0; i < c.size(); ++i)
            s += (i ? "," : "") + std::to_string(c[i]);
        s += ")";
    }
    return s;
}

json certificate_json(const FactorCertificate& c) {
    return {{"S", c.witness}, {"isolated", c.isolated_count}, {"text", c.to_text()}};
}

json witness_json(const CutWitness& w) {
    return {{"S", w.cut}, {"components", w.components}, {"text", w.to_text()}};
}

json cycle_labels(const HamCycle& c) {
    json out = json::array();
    for (std::size_t k = 0; k < c.vertices.size(); ++k)
        out.push_back(to_string(c.label(k)));
    return out;
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Malformed: return kExitParse;
        case ErrorKind::NoFactor:
        case ErrorKind::NoPerfectMatching:
        case ErrorKind::NoP23Factor: return kExitNoFactor;
        case ErrorKind::BudgetExceeded: return kExitBudget;
        default: return kExitPrecondition;
    }
}

void emit(std::ostream& out, const Options& o, const json& payload, const std::string& text) {
    if (o.json)
        out << payload.dump(2) << "\n";
    else if (!text.empty())
        out << text << (text.back() == '\n' ? "" : "\n");
}

// Writes `text` to --out when given, otherwise returns it for stdout.
std::string route(const Options& o, const std::string& text) {
    if (o.out.empty())
        return text;
    write_text_file(o.out, text);
    return {};
}

int cmd_product(const Options& o, std::ostream& out) {
    const Graph h = load_graph(o.graph);
    const ProductGraph p = path_product(o.n, h);
    json payload{{"command", "product"},
                 {"status", "ok"},
                 {"n", o.n},
                 {"base_order", h.order()},
                 {"order", p.graph.order()},
                 {"size", p.graph.size()}};
    if (o.out.empty())
        payload["edges"] = edges_json(p.graph.edges());
    if (!o.dot.empty()) {
        DotOptions d;
        d.name = "Product";
        d.label = [&p](Vertex v) { return to_string(p.label(v)); };
        write_text_file(o.dot, emit_dot(p.graph, d));
    }
    emit(out, o, payload, route(o, emit_graph(p.graph)));
    return kExitOk;
}

std::string_view mode_name(BuildMode m) {
    switch (m) {
        case BuildMode::Auto: return "auto";
        case BuildMode::Matching: return "matching";
        case BuildMode::PathFactor: return "pathfactor";
    }
    return "?";
}

int cmd_hamcycle(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    const BuildMode mode = o.mode == "matching"     ? BuildMode::Matching
                           : o.mode == "pathfactor" ? BuildMode::PathFactor
                                                    : BuildMode::Auto;
    MainResult r;
    try {
        r = build_ham_main(o.n, g, mode);
    } catch (const NoFactorError& e) {
        json payload{{"command", "hamcycle"}, {"status", "error"}, {"error", "NoFactor"}, {"message", e.what()}};
        std::string text = "error: NoFactor: " + std::string(e.what());
        if (e.certificate) {
            payload["certificate"] = certificate_json(*e.certificate);
            text += "\ncertificate: " + e.certificate->to_text();
        }
        throw CommandFailure{kExitNoFactor, payload, text};
    } catch (const LayerBoundError& e) {
        json payload{{"command", "hamcycle"},
                     {"status", "error"},
                     {"error", "LayerBound"},
                     {"message", e.what()},
                     {"required_n", e.required}};
        throw CommandFailure{kExitPrecondition, payload, "error: LayerBound: " + std::string(e.what())};
    }

    HamCycle cycle = r.cycle;
    if (!o.dot.empty())
        write_text_file(o.dot, emit_cycle_dot(path_product(o.n, g).graph, cycle));
    json payload{{"command", "hamcycle"},
                 {"status", "ok"},
                 {"n", o.n},
                 {"base_order", g.order()},
                 {"mode", mode_name(r.used)},
                 {"factor", components_json(r.factor)},
                 {"tree", edges_json(r.tree.edges())},
                 {"cycle", cycle_labels(cycle)}};
    std::string text = route(o, emit_cycle(cycle));
    if (text.empty())
        text = "ok: Hamiltonian cycle on " + std::to_string(cycle.vertices.size()) + " vertices (" +
               std::string(mode_name(r.used)) + ") written to " + o.out;
    emit(out, o, payload, text);
    return kExitOk;
}

int cmd_pathfactor(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    const bool pm = o.kind == "pm";
    auto f = pm ? find_perfect_matching(g) : find_p23_factor(g);
    if (f) {
        json payload{{"command", "pathfactor"}, {"status", "ok"}, {"kind", o.kind}, {"components", components_json(*f)}};
        emit(out, o, payload, components_text(*f));
        return kExitOk;
    }
    json payload{{"command", "pathfactor"}, {"status", "error"}, {"error", "NoFactor"}, {"kind", o.kind}};
    std::string text = pm ? "none: no perfect matching" : "none: no path factor";
    if (pm && g.order() % 2 != 0)
        text += " (odd order)";
    if (!pm || !find_p23_factor(g)) {
        if (g.order() <= kCertificateOrderCap) {
            auto cert = wang_certificate(g);
            payload["certificate"] = certificate_json(*cert);
            text += "\ncertificate: " + cert->to_text();
        }
    }
    throw CommandFailure{kExitNoFactor, payload, text};
}

SearchBudget budget_of(const Options& o) {
    return {std::chrono::duration<double>(o.budget_seconds), o.workers};
}

int cmd_toughness(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    json payload{{"command", "toughness"}, {"order", g.order()}};
    std::string text;
    if (o.one_tough) {
        auto r = is_one_tough(g, budget_of(o));
        payload["status"] = r.verdict == Verdict::Unknown ? "unknown" : "ok";
        payload["one_tough"] = std::string(to_string(r.verdict));
        text = "1-tough: " + std::string(to_string(r.verdict));
        if (r.witness) {
            payload["witness"] = witness_json(*r.witness);
            text += "\nwitness: " + r.witness->to_text();
        }
    } else if (g.order() > kToughnessOrderCap) {
        payload["status"] = "unknown";
        payload["toughness"] = "Unknown";
        text = "toughness: Unknown (exact scan limited to order " + std::to_string(kToughnessOrderCap) + ")";
    } else {
        auto r = toughness_exact(g);
        payload["status"] = "ok";
        payload["toughness"] = r.value.to_string();
        text = "toughness: " + r.value.to_string();
        if (r.witness) {
            payload["witness"] = witness_json(*r.witness);
            text += "\nwitness: " + r.witness->to_text();
        }
    }
    emit(out, o, payload, text);
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    const Graph base = load_graph(o.graph);
    const int layers = o.n > 0 ? o.n : 1;
    const Graph g = o.n > 0 ? path_product(o.n, base).graph : base;
    auto r = brute_hamiltonian(g, budget_of(o));
    json payload{{"command", "check"}, {"order", g.order()}, {"hamiltonian", std::string(to_string(r.status))}};
    std::string text = r.status == OracleStatus::Found  ? "hamiltonian: yes"
                       : r.status == OracleStatus::None ? "hamiltonian: no (exhaustive search)"
                                                        : "hamiltonian: unknown";
    if (r.status == OracleStatus::Unknown) {
        payload["status"] = "error";
        payload["error"] = "BudgetExceeded";
        throw CommandFailure{kExitBudget, payload, text + " (budget exhausted)"};
    }
    payload["status"] = "ok";
    if (r.status == OracleStatus::Found) {
        HamCycle cycle{r.cycle.vertices, layers, base.order()};
        payload["cycle"] = cycle_labels(cycle);
        std::string body = route(o, emit_cycle(cycle));
        if (!body.empty())
            text += "\n" + body;
    }
    emit(out, o, payload, text);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    const HamCycle cycle = parse_cycle(read_text_file(o.cycle));
    bool valid = false;
    std::string reason;
    if (o.n > 0 && o.n != cycle.layers) {
        reason = "layer count differs from the cycle header";
    } else if (g.order() == cycle.layers * cycle.base_order) {
        valid = verify_cycle(g, cycle);
    } else if (g.order() == cycle.base_order) {
        valid = verify_cycle(path_product(cycle.layers, g).graph, cycle);
    } else {
        reason = "graph order matches neither the product nor its base";
    }
    json payload{{"command", "verify"}, {"status", "ok"}, {"valid", valid}};
    std::string text = std::string("valid: ") + (valid ? "true" : "false");
    if (!reason.empty()) {
        payload["reason"] = reason;
        text += " (" + reason + ")";
    }
    emit(out, o, payload, text);
    return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.conjecture == 1 && o.k < 3)
        throw CommandFailure{kExitUsage,
                             {{"command", "scan"}, {"status", "error"}, {"error", "Usage"}, {"message", "--k must be >= 3"}},
                             "error: --k must be at least 3"};
    ScanOptions so;
    so.instance_seconds = o.budget_seconds;
    so.total_seconds = o.total_seconds;
    so.workers = o.workers;
    so.start_index = o.start_index;
    so.progress = [&err](const std::string& line) { err << line << "\n"; };
    ScanReport r = o.conjecture == 1 ? scan_conjecture1(o.k, o.max_order, so) : scan_conjecture2(o.max_h, o.max_n, so);
    json summary = r.summary();
    if (!o.out.empty()) {
        write_text_file(o.out, r.log());
        write_text_file(o.out + ".json", summary.dump(2) + "\n");
        for (std::size_t idx : r.candidates)
            for (const auto& e : r.entries)
                if (e.index == idx)
                    write_text_file(o.out + ".candidate" + std::to_string(idx) + ".txt", emit_graph(e.graph));
    }
    if (o.json)
        out << summary.dump(2) << "\n";
    else
        out << (o.out.empty() ? r.log()
                              : "scan " + r.name + ": " + std::to_string(r.examined()) + " instances, " +
                                    std::to_string(r.candidates.size()) + " candidates, report " + o.out + "\n");
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Hamiltonian cycles, path factors and toughness for P_n x G products", "prodham"};
    app.require_subcommand(1);

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph, "edge-list file or fixture:NAME (T1, fig4, fig1)")->required();
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-seconds", o.budget_seconds, "time limit")->check(CLI::PositiveNumber);
        sub->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1, 256));
    };

    auto* product = app.add_subcommand("product", "write the edge list of P_n x G");
    product->add_option("--n", o.n, "path order")->required()->check(CLI::Range(1, 100000));
    add_graph(product);
    product->add_option("--out", o.out, "output file");
    product->add_option("--dot", o.dot, "DOT output file");
    add_json(product);

    auto* hamcycle = app.add_subcommand("hamcycle", "construct a Hamiltonian cycle of P_n x G");
    hamcycle->add_option("--n", o.n, "path order")->required()->check(CLI::Range(1, 100000));
    add_graph(hamcycle);
    hamcycle->add_option("--mode", o.mode, "construction")->check(CLI::IsMember({"auto", "matching", "pathfactor"}));
    hamcycle->add_option("--out", o.out, "cycle file");
    hamcycle->add_option("--dot", o.dot, "DOT output file");
    add_json(hamcycle);

    auto* pathfactor = app.add_subcommand("pathfactor", "find a perfect matching or {P2,P3}-factor");
    add_graph(pathfactor);
    pathfactor->add_option("--kind", o.kind, "factor kind")->check(CLI::IsMember({"pm", "p23"}));
    add_json(pathfactor);

    auto* toughness = app.add_subcommand("toughness", "exact toughness or 1-toughness");
    add_graph(toughness);
    toughness->add_flag("--one-tough", o.one_tough, "decide 1-toughness only");
    add_budget(toughness);
    add_json(toughness);

    auto* check = app.add_subcommand("check", "exhaustive Hamiltonicity check of G or P_n x G");
    add_graph(check);
    check->add_option("--n", o.n, "path order; omit to check the graph itself")->check(CLI::Range(1, 100000));
    check->add_option("--out", o.out, "cycle file");
    add_budget(check);
    add_json(check);

    auto* verify = app.add_subcommand("verify", "validate a cycle file");
    add_graph(verify);
    verify->add_option("--cycle", o.cycle, "cycle file")->required();
    verify->add_option("--n", o.n, "expected path order")->check(CLI::Range(1, 100000));
    add_json(verify);

    auto* scan = app.add_subcommand("scan", "search small instances of the two conjectures");
    scan->add_option("conjecture,--conjecture", o.conjecture, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    scan->add_option("--k", o.k, "max degree (conjecture 1)");
    scan->add_option("--max-order", o.max_order, "largest base order (conjecture 1)")->check(CLI::Range(2, 12));
    scan->add_option("--max-h", o.max_h, "largest base order (conjecture 2)")->check(CLI::Range(2, 12));
    scan->add_option("--max-n", o.max_n, "largest path order (conjecture 2)")->check(CLI::Range(1, 1000));
    scan->add_option("--total-seconds", o.total_seconds, "overall time limit")->check(CLI::PositiveNumber);
    scan->add_option("--start-index", o.start_index, "resume from this instance");
    scan->add_option("--out", o.out, "report file");
    add_budget(scan);
    add_json(scan);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        if (!app.get_subcommands().empty())
            err << app.get_subcommands().front()->help();
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "product")
            return cmd_product(o, out);
        if (command == "hamcycle")
            return cmd_hamcycle(o, out);
        if (command == "pathfactor")
            return cmd_pathfactor(o, out);
        if (command == "toughness")
            return cmd_toughness(o, out);
        if (command == "check")
            return cmd_check(o, out);
        if (command == "verify")
            return cmd_verify(o, out);
        return cmd_scan(o, out, err);
    } catch (const CommandFailure& f) {
        if (o.json)
            out << f.payload.dump(2) << "\n";
        else
            err << f.text << "\n";
        return f.code;
    } catch (const Error& e) {
        if (o.json)
            out << json{{"command", command}, {"status", "error"}, {"error", to_string(e.kind())}, {"message", e.what()}}
                       .dump(2)
                << "\n";
        else
            err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

}  // namespace prodham
