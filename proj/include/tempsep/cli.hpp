#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tempsep/util.hpp"

namespace tempsep {

// What a command did, printed as text or JSON (--json).
struct RunReport {
    std::string command;
    int n = 0;
    int tau = 0;
    long long edge_count = 0;
    std::optional<int> s, z, k;
    std::string answer;  // yes | no | infeasible | true | false | ok
    std::optional<VertexSet> witness;
    std::string solver;
    double time_ms = 0.0;
    std::optional<int> p;
    std::optional<long long> dsigma;
    std::optional<uint64_t> seed;
};

// Runs one CLI invocation (arguments without the program name).
// Exit codes: 0 yes/success, 1 no, 2 error or refused, 3 timeout.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tempsep
