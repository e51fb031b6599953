#pragma once

#include <iosfwd>
#include <vector>

#include "tempsep/errors.hpp"
#include "tempsep/temporal_graph.hpp"

namespace tempsep {

// CNF formula with at most three literals per clause. Literals are signed
// variable indices (DIMACS style), clauses non-empty.
struct CnfFormula {
    int variables = 0;
    std::vector<std::vector<int>> clauses;

    static CnfFormula make(int variables, std::vector<std::vector<int>> clauses);
    // `p cnf <vars> <clauses>` header, clauses terminated by 0, `c` comments.
    static CnfFormula parse_dimacs(std::istream& in);
    static CnfFormula parse_dimacs(const std::string& text);
};

// True iff some assignment satisfies every clause (exhaustive, for tests).
bool cnf_satisfiable_bruteforce(const CnfFormula& f);

// Vertex Cover -> separation on a temporal split graph with four layers.
// Vertex layout: s=1, then the s_v block, the original vertices, the z_v
// block, and z last. The instance budget is n + k; it is a yes-instance iff
// g has a vertex cover of size at most k.
SeparationInstance vc_to_temporal_split(const StaticGraph& g, int k);

// Positions of the gadget vertices of vc_to_temporal_split.
struct VcSplitLayout {
    int n;
    Vertex s() const { return 1; }
    Vertex sv(Vertex v) const { return 1 + v; }
    Vertex mid(Vertex v) const { return 1 + n + v; }
    Vertex zv(Vertex v) const { return 1 + 2 * n + v; }
    Vertex z() const { return 3 * n + 2; }
};

// 3-SAT -> separation on a temporal permutation graph. Clauses with fewer
// than three literals are padded by repeating a literal; more than three is
// an error. The instance is a yes-instance iff the formula is satisfiable.
SeparationInstance sat3_to_temporal_perm(const CnfFormula& f);

// Positions of the gadget vertices of sat3_to_temporal_perm.
struct SatPermLayout {
    int n, m;
    Vertex s() const { return 1; }
    Vertex t_var(int i) const { return 2 * i; }
    Vertex f_var(int i) const { return 2 * i + 1; }
    Vertex clause(int i, int j) const { return 1 + 2 * n + 3 * (i - 1) + j; }
    Vertex z() const { return 2 * n + 3 * m + 2; }
    int vertices() const { return 2 * n + 3 * m + 2; }
    int lifetime() const { return n + 5 * m + 2; }
    int budget() const { return n + 2 * m; }
};

// Vertex Cover -> minimum switching count on a temporal split graph.
// Vertices: u_1 = u, u_2 = n + u; edges of g ordered lexicographically, one
// layer per edge after the initial pendant layer. The minimum number of
// switching vertices of the output equals the minimum vertex cover of g.
TemporalGraph vc_to_min_switching(const StaticGraph& g);

}  // namespace tempsep
