#include "ildt/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "ildt/error.hpp"

namespace ildt {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

NodeId node_id_from(int64_t v, const std::string& where) {
    if (v < 0 || v > int64_t{0xffffffff})
        throw Error(where + ": node id " + std::to_string(v) + " out of range");
    return static_cast<NodeId>(v);
}

Digraph parse_json_graph(const std::string& text, const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("JSON parse error in " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
        throw Error(path + ": graph JSON must be an object with \"n\" and \"arcs\"");
    if (!j["n"].is_number_integer() || !j["arcs"].is_array())
        throw Error(path + ": \"n\" must be an integer and \"arcs\" an array");
    NodeId n = node_id_from(j["n"].get<int64_t>(), path);
    std::vector<Arc> arcs;
    arcs.reserve(j["arcs"].size());
    for (const auto& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
            !a[1].is_number_integer())
            throw Error(path + ": every arc must be a [u, v] integer pair");
        arcs.emplace_back(node_id_from(a[0].get<int64_t>(), path),
                          node_id_from(a[1].get<int64_t>(), path));
    }
    try {
        return make_digraph(n, arcs);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

Digraph parse_edge_list(const std::string& text, const std::string& path) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<Arc> arcs;
    NodeId max_id = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = path + ":" + std::to_string(lineno);
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        int64_t u = 0, v = 0;
        if (!(ls >> u >> v)) throw Error(where + ": expected 'u v' with two integer node ids");
        std::string extra;
        if (ls >> extra) throw Error(where + ": unexpected trailing token '" + extra + "'");
        Arc arc{node_id_from(u, where), node_id_from(v, where)};
        max_id = std::max({max_id, arc.first, arc.second});
        arcs.push_back(arc);
    }
    if (arcs.empty()) throw Error(path + ": no arcs found");
    const NodeId n = max_id + 1;
    std::vector<bool> touched(n, false);
    for (const Arc& a : arcs) touched[a.first] = touched[a.second] = true;
    for (NodeId x = 0; x < n; ++x)
        if (!touched[x])
            throw Error(path + ": no arc touches node " + std::to_string(x) +
                        "; edge lists carry only implicit node counts — use the JSON format "
                        "for graphs with isolated nodes");
    try {
        return make_digraph(n, arcs);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

}  // namespace

GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "json") return GraphFormat::Json;
    if (name == "dot") return GraphFormat::Dot;
    throw Error("unknown graph format '" + name + "' (expected edgelist, json, or dot)");
}

Digraph builtin_seed(const std::string& name) {
    if (name == "k1") return make_digraph(1, {});
    if (name == "k2bi") return make_digraph(2, {{0, 1}, {1, 0}});
    if (name == "dag2") return make_digraph(2, {{0, 1}});
    if (name.size() >= 2 && name[0] == 'c') {
        uint32_t n = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
        if (ec == std::errc{} && ptr == name.data() + name.size() && n >= 3) {
            std::vector<Arc> arcs;
            arcs.reserve(n);
            for (NodeId i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
            return make_digraph(n, arcs);
        }
    }
    throw Error("unknown builtin seed '" + name +
                "' (expected k1, k2bi, dag2, or cN with N >= 3)");
}

Digraph resolve_seed(const std::string& descriptor) {
    const std::string prefix = "builtin:";
    if (descriptor.rfind(prefix, 0) == 0) return builtin_seed(descriptor.substr(prefix.size()));
    return load_graph(descriptor);
}

std::string format_graph(const Digraph& g, GraphFormat fmt) {
    const NodeId n = g.node_count();
    switch (fmt) {
        case GraphFormat::EdgeList: {
            for (NodeId x = 0; x < n; ++x)
                if (g.out_neighbors(x).empty() && g.in_neighbors(x).empty())
                    throw Error("node " + std::to_string(x) +
                                " has no arcs; the edge-list format cannot represent isolated "
                                "nodes — use the json format");
            std::string out;
            for (const Arc& a : g.arcs())
                out += std::to_string(a.first) + " " + std::to_string(a.second) + "\n";
            return out;
        }
        case GraphFormat::Json: {
            nlohmann::json j;
            j["n"] = n;
            auto& arr = j["arcs"] = nlohmann::json::array();
            for (const Arc& a : g.arcs()) arr.push_back({a.first, a.second});
            return j.dump() + "\n";
        }
        case GraphFormat::Dot: {
            std::string out = "digraph g {\n";
            for (NodeId x = 0; x < n; ++x)
                if (g.out_neighbors(x).empty() && g.in_neighbors(x).empty())
                    out += "  " + std::to_string(x) + ";\n";
            for (const Arc& a : g.arcs()) {
                const bool recip = g.has_arc(a.second, a.first);
                if (recip && a.first > a.second) continue;  // pair rendered once
                out += "  " + std::to_string(a.first) + " -> " + std::to_string(a.second);
                if (recip) out += " [dir=both]";
                out += ";\n";
            }
            out += "}\n";
            return out;
        }
    }
    throw Error("unhandled graph format");
}

void save_graph(const Digraph& g, const std::string& path, GraphFormat fmt) {
    const std::string text = format_graph(g, fmt);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write file: " + path);
    f << text;
    f.close();
    if (!f) throw Error("write failed: " + path);
}

Digraph load_graph(const std::string& path) {
    const std::string text = read_file(path);
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error(path + ": file is empty");
    if (text[first] == '{') return parse_json_graph(text, path);
    return parse_edge_list(text, path);
}

std::string format_values_csv(const std::vector<Complex>& values, uint32_t t) {
    std::string out = "re,im,t\n";
    char buf[96];
    for (const Complex& z : values) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%u\n", z.real(), z.imag(),
                      static_cast<unsigned>(t));
        out += buf;
    }
    return out;
}

ResourceCaps caps_from_env() {
    ResourceCaps caps;
    auto read = [](const char* name, int64_t& slot) {
        const char* raw = std::getenv(name);
        if (!raw) return;
        const std::string s(raw);
        int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v <= 0)
            throw Error(std::string(name) + " must be a positive integer, got '" + s + "'");
        slot = v;
    };
    read("ILDT_MAX_ARCS", caps.max_arcs);
    read("ILDT_MAX_VALUES", caps.max_values);
    read("ILDT_CENSUS_BUDGET_MS", caps.census_budget_ms);
    return caps;
}

}  // namespace ildt
