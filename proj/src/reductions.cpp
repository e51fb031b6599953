#include "tempsep/reductions.hpp"

#include <sstream>
#include <string>

namespace tempsep {

CnfFormula CnfFormula::make(int variables, std::vector<std::vector<int>> clauses) {
    if (variables < 0) throw std::invalid_argument("negative variable count");
    for (const auto& cl : clauses) {
        if (cl.empty()) throw std::invalid_argument("empty clause");
        for (int lit : cl) {
            int var = std::abs(lit);
            if (lit == 0 || var > variables)
                throw std::invalid_argument("literal out of range: " + std::to_string(lit));
        }
    }
    return CnfFormula{variables, std::move(clauses)};
}

CnfFormula CnfFormula::parse_dimacs(std::istream& in) {
    int lineno = 0;
    int vars = -1, expected_clauses = -1;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string kind;
            if (!(ls >> kind >> vars >> expected_clauses) || kind != "cnf")
                throw ParseError("expected `p cnf <vars> <clauses>`", lineno);
            continue;
        }
        if (vars < 0) throw ParseError("clause before `p cnf` header", lineno);
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty()) throw ParseError("empty clause", lineno);
                clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) clauses.push_back(current);
    if (vars < 0) throw ParseError("missing `p cnf` header");
    if (expected_clauses >= 0 && static_cast<int>(clauses.size()) != expected_clauses)
        throw ParseError("clause count does not match the header");
    return CnfFormula::make(vars, std::move(clauses));
}

CnfFormula CnfFormula::parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

bool cnf_satisfiable_bruteforce(const CnfFormula& f) {
    for (uint64_t assign = 0; assign < (uint64_t{1} << f.variables); ++assign) {
        bool all = true;
        for (const auto& cl : f.clauses) {
            bool sat = false;
            for (int lit : cl) {
                bool val = (assign >> (std::abs(lit) - 1)) & 1;
                if ((lit > 0) == val) sat = true;
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

SeparationInstance vc_to_temporal_split(const StaticGraph& g, int k) {
    if (g.n < 1) throw std::invalid_argument("input graph needs at least one vertex");
    if (k < 0) throw std::invalid_argument("negative cover budget");
    VcSplitLayout ly{g.n};
    std::vector<TimeEdge> es;
    for (Vertex v = 1; v <= g.n; ++v) {
        es.push_back({ly.s(), ly.sv(v), 1});
        es.push_back({ly.sv(v), ly.mid(v), 1});
        es.push_back({ly.mid(v), ly.zv(v), 4});
        es.push_back({ly.zv(v), ly.z(), 4});
        es.push_back({ly.s(), ly.mid(v), 3});
        es.push_back({ly.mid(v), ly.z(), 2});
    }
    for (auto [v, w] : g.edges) {
        es.push_back({ly.sv(v), ly.zv(w), 1});
        es.push_back({ly.sv(w), ly.zv(v), 1});
    }
    // Cliques on the s_v block in layer 1 and the z_v block in layer 4 turn
    // those layers into split graphs.
    for (Vertex v = 1; v <= g.n; ++v)
        for (Vertex w = v + 1; w <= g.n; ++w) {
            es.push_back({ly.sv(v), ly.sv(w), 1});
            es.push_back({ly.zv(v), ly.zv(w), 4});
        }
    TemporalGraph tg = TemporalGraph::make(3 * g.n + 2, 4, std::move(es));
    return SeparationInstance::make(std::move(tg), ly.s(), ly.z(), g.n + k);
}

SeparationInstance sat3_to_temporal_perm(const CnfFormula& f) {
    std::vector<std::vector<int>> clauses = f.clauses;
    for (auto& cl : clauses) {
        if (cl.size() > 3) throw std::invalid_argument("clause with more than three literals");
        while (cl.size() < 3) cl.push_back(cl.front());  // padding keeps satisfiability
    }
    const int n = f.variables;
    const int m = static_cast<int>(clauses.size());
    SatPermLayout ly{n, m};
    const int N = ly.vertices();
    std::vector<TimeEdge> es;

    // Variable layers: t_i reaches everything above, f_i everything below.
    for (int i = 1; i <= n; ++i) {
        for (Vertex v = ly.t_var(i) + 1; v <= N; ++v) es.push_back({ly.t_var(i), v, i});
        for (Vertex w = 1; w < ly.f_var(i); ++w) es.push_back({w, ly.f_var(i), i});
    }
    // Layer n+1: s adjacent to all variable vertices.
    for (Vertex v = 2; v <= ly.f_var(n); ++v) es.push_back({ly.s(), v, n + 1});
    // Literal layers: the literal's vertex and the clause vertex bridge the
    // variable half and the clause half.
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= 3; ++j) {
            int lit = clauses[i - 1][j - 1];
            Vertex v = lit > 0 ? ly.t_var(lit) : ly.f_var(-lit);
            Vertex c = ly.clause(i, j);
            int t = n + 1 + 3 * (i - 1) + j;
            es.push_back({v, c, t});
            for (Vertex w = v + 1; w <= ly.f_var(n); ++w) es.push_back({v, w, t});
            for (Vertex w = ly.clause(1, 1); w < c; ++w) es.push_back({w, c, t});
        }
    // Layer n+3m+2: z adjacent to all clause vertices.
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= 3; ++j) es.push_back({ly.clause(i, j), ly.z(), n + 3 * m + 2});
    // Clause check layers.
    for (int i = 1; i <= m; ++i) {
        int t1 = n + 3 * m + 2 * i + 1;
        for (Vertex v = ly.clause(i, 2) + 1; v <= N; ++v) es.push_back({ly.clause(i, 2), v, t1});
        for (Vertex w = 1; w < ly.clause(i, 3); ++w) es.push_back({w, ly.clause(i, 3), t1});
        int t2 = n + 3 * m + 2 * i + 2;
        for (Vertex v = ly.clause(i, 1) + 1; v <= N; ++v) es.push_back({ly.clause(i, 1), v, t2});
        for (Vertex w = 1; w < ly.clause(i, 2); ++w) {
            es.push_back({w, ly.clause(i, 2), t2});
            es.push_back({w, ly.clause(i, 3), t2});
        }
    }
    TemporalGraph tg = TemporalGraph::make(N, ly.lifetime(), std::move(es));
    return SeparationInstance::make(std::move(tg), ly.s(), ly.z(), ly.budget());
}

TemporalGraph vc_to_min_switching(const StaticGraph& g) {
    if (g.edges.empty()) throw std::invalid_argument("input graph needs at least one edge");
    const int n = g.n;
    auto u1 = [](Vertex u) { return u; };
    auto u2 = [n](Vertex u) { return n + u; };
    const int layers = static_cast<int>(g.edges.size()) + 1;
    std::vector<TimeEdge> es;
    for (Vertex u = 1; u <= n; ++u) {
        es.push_back({u1(u), u2(u), 1});
        for (Vertex v = u + 1; v <= n; ++v) es.push_back({u1(u), u1(v), 1});
    }
    // g.edges is already in lexicographic order; layer i+1 drops edge e_i.
    for (size_t i = 0; i < g.edges.size(); ++i) {
        int t = static_cast<int>(i) + 2;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (std::pair{u, v} != g.edges[i]) es.push_back({u1(u), u1(v), t});
    }
    return TemporalGraph::make(2 * n, layers, std::move(es));
}

}  // namespace tempsep
