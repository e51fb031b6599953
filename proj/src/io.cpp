#include "tempsep/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tempsep {

SeparationInstance LoadedInstance::instance() const {
    if (!has_terminals())
        throw ParseError("file has no `st <s> <z> <k>` instance line");
    return SeparationInstance::make(graph, *s, *z, *k);
}

namespace {

// Strips comments, returns significant tokens per line.
bool next_tokens(std::istream& in, std::vector<std::string>& toks, int& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        toks.assign(std::istream_iterator<std::string>(ls), std::istream_iterator<std::string>());
        if (!toks.empty()) return true;
    }
    return false;
}

int parse_int(const std::string& tok, int lineno) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got `" + tok + "`", lineno);
    }
}

}  // namespace

LoadedInstance parse_temporal_text(std::istream& in) {
    int lineno = 0;
    std::vector<std::string> toks;
    if (!next_tokens(in, toks, lineno)) throw ParseError("empty input, expected `tg <n> <tau>`");
    if (toks.size() != 3 || toks[0] != "tg")
        throw ParseError("expected header `tg <n> <tau>`", lineno);
    int n = parse_int(toks[1], lineno);
    int tau = parse_int(toks[2], lineno);

    std::vector<TimeEdge> edges;
    std::optional<Vertex> s, z;
    std::optional<int> k;
    while (next_tokens(in, toks, lineno)) {
        if (toks[0] == "st") {
            if (toks.size() != 4) throw ParseError("expected `st <s> <z> <k>`", lineno);
            if (s) throw ParseError("duplicate st line", lineno);
            s = parse_int(toks[1], lineno);
            z = parse_int(toks[2], lineno);
            k = parse_int(toks[3], lineno);
            continue;
        }
        if (toks.size() != 3) throw ParseError("expected `<u> <v> <t>`", lineno);
        edges.push_back({parse_int(toks[0], lineno), parse_int(toks[1], lineno),
                         parse_int(toks[2], lineno)});
    }
    LoadedInstance li;
    try {
        li.graph = TemporalGraph::make(n, tau, std::move(edges));
        if (s) {
            // Validates terminal/budget ranges eagerly.
            SeparationInstance::make(li.graph, *s, *z, *k);
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    li.s = s;
    li.z = z;
    li.k = k;
    return li;
}

LoadedInstance parse_temporal_text(const std::string& text) {
    std::istringstream in(text);
    return parse_temporal_text(in);
}

std::string emit_temporal_text(const LoadedInstance& li) {
    std::ostringstream out;
    out << "tg " << li.graph.n << ' ' << li.graph.tau << '\n';
    for (const TimeEdge& e : li.graph.edges) out << e.u << ' ' << e.v << ' ' << e.t << '\n';
    if (li.has_terminals()) out << "st " << *li.s << ' ' << *li.z << ' ' << *li.k << '\n';
    return out.str();
}

LoadedInstance parse_temporal_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        int n = j.at("n").get<int>();
        int tau = j.at("tau").get<int>();
        std::vector<TimeEdge> edges;
        for (const auto& arr : j.at("edges")) {
            if (!arr.is_array() || arr.size() != 3)
                throw ParseError("each edge must be a [u, v, t] triple");
            edges.push_back({arr[0].get<int>(), arr[1].get<int>(), arr[2].get<int>()});
        }
        LoadedInstance li;
        li.graph = TemporalGraph::make(n, tau, std::move(edges));
        if (j.contains("s") || j.contains("z") || j.contains("k")) {
            li.s = j.at("s").get<int>();
            li.z = j.at("z").get<int>();
            li.k = j.at("k").get<int>();
            SeparationInstance::make(li.graph, *li.s, *li.z, *li.k);
        }
        return li;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad instance JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string emit_temporal_json(const LoadedInstance& li) {
    nlohmann::json j;
    j["n"] = li.graph.n;
    j["tau"] = li.graph.tau;
    auto edges = nlohmann::json::array();
    for (const TimeEdge& e : li.graph.edges) edges.push_back({e.u, e.v, e.t});
    j["edges"] = std::move(edges);
    if (li.has_terminals()) {
        j["s"] = *li.s;
        j["z"] = *li.z;
        j["k"] = *li.k;
    }
    return j.dump(2) + "\n";
}

LoadedInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_temporal_json(text);
    return parse_temporal_text(text);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
}

StaticGraph parse_static_text(std::istream& in) {
    int lineno = 0;
    std::vector<std::string> toks;
    if (!next_tokens(in, toks, lineno)) throw ParseError("empty input, expected `sg <n>`");
    if (toks.size() != 2 || toks[0] != "sg") throw ParseError("expected header `sg <n>`", lineno);
    int n = parse_int(toks[1], lineno);
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (next_tokens(in, toks, lineno)) {
        if (toks.size() != 2) throw ParseError("expected `<u> <v>`", lineno);
        edges.emplace_back(parse_int(toks[0], lineno), parse_int(toks[1], lineno));
    }
    try {
        return StaticGraph::make(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

StaticGraph parse_static_text(const std::string& text) {
    std::istringstream in(text);
    return parse_static_text(in);
}

std::string emit_static_text(const StaticGraph& g) {
    std::ostringstream out;
    out << "sg " << g.n << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace tempsep
