#include "prodham/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "prodham/errors.hpp"

namespace prodham {

namespace {

[[noreturn]] void malformed(const std::string& msg) { throw Error(ErrorKind::Malformed, msg); }

std::string strip_comments(std::string_view text) {
    std::string out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#')
            continue;
        out += line;
        out += '\n';
    }
    return out;
}

bool read_int(std::istream& in, long long& value) {
    std::string token;
    if (!(in >> token))
        return false;
    std::size_t used = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        malformed("expected an integer, got '" + token + "'");
    }
    if (used != token.size())
        malformed("expected an integer, got '" + token + "'");
    return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in(strip_comments(text));
    long long order = 0, count = 0;
    if (!read_int(in, order) || !read_int(in, count))
        malformed("missing header 'order edgecount'");
    if (order < 1 || count < 0 || order > 1'000'000)
        malformed("bad header " + std::to_string(order) + " " + std::to_string(count));
    std::vector<Edge> edges;
    for (long long i = 0; i < count; ++i) {
        long long a = 0, b = 0;
        if (!read_int(in, a) || !read_int(in, b))
            malformed("expected " + std::to_string(count) + " edges, found " + std::to_string(i));
        if (a < 1 || b < 1 || a > order || b > order)
            malformed("edge " + std::to_string(a) + " " + std::to_string(b) + " out of range");
        if (a == b)
            malformed("loop at vertex " + std::to_string(a));
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    std::string extra;
    if (in >> extra)
        malformed("trailing data after " + std::to_string(count) + " edges");
    return Graph(static_cast<int>(order), edges);
}

std::string emit_graph(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Malformed, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string emit_dot(const Graph& g, const DotOptions& options) {
    std::string out = "graph " + options.name + " {\n";
    for (Vertex v = 1; v <= g.order(); ++v) {
        std::string label = options.label ? options.label(v) : std::to_string(v);
        out += "  " + std::to_string(v) + " [label=\"" + label + "\"];\n";
    }
    std::vector<Edge> bold = options.bold;
    std::sort(bold.begin(), bold.end());
    for (const Edge& e : g.edges()) {
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
        if (!bold.empty())
            out += std::binary_search(bold.begin(), bold.end(), e) ? " [style=bold, penwidth=2]"
                                                                    : " [color=gray]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::string emit_cycle_dot(const Graph& product, const HamCycle& cycle) {
    DotOptions opts;
    opts.name = "HamCycle";
    const int base = cycle.base_order;
    opts.label = [base](Vertex v) { return to_string(product_label(v, base)); };
    opts.bold = cycle.edges();
    return emit_dot(product, opts);
}

std::string emit_cycle(const HamCycle& cycle) {
    std::string out = std::to_string(cycle.layers) + " " + std::to_string(cycle.base_order) + "\n";
    for (std::size_t k = 0; k < cycle.vertices.size(); ++k) {
        if (k)
            out += ' ';
        out += to_string(cycle.label(k));
    }
    out += "\n";
    return out;
}

HamCycle parse_cycle(std::string_view text) {
    std::istringstream in(strip_comments(text));
    long long layers = 0, base = 0;
    if (!read_int(in, layers) || !read_int(in, base) || layers < 1 || base < 1)
        malformed("missing cycle header 'n |V(H)|'");
    HamCycle cycle;
    cycle.layers = static_cast<int>(layers);
    cycle.base_order = static_cast<int>(base);
    std::string token;
    while (in >> token) {
        auto sep = token.find('_');
        if (sep == std::string::npos)
            malformed("bad vertex token '" + token + "'");
        int layer = 0, v = 0;
        try {
            std::size_t a = 0, b = 0;
            layer = std::stoi(token.substr(0, sep), &a);
            v = std::stoi(token.substr(sep + 1), &b);
            if (a != sep || b != token.size() - sep - 1)
                malformed("bad vertex token '" + token + "'");
        } catch (const std::logic_error&) {
            malformed("bad vertex token '" + token + "'");
        }
        if (layer < 1 || layer > layers || v < 1 || v > base)
            malformed("vertex token '" + token + "' out of range");
        cycle.vertices.push_back(product_id(layer, v, cycle.base_order));
    }
    return cycle;
}

}  // namespace prodham
