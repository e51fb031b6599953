#pragma once

#include <stdexcept>
#include <string>

namespace tempsep {

// Input file could not be parsed; line is 1-based, 0 when unknown.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_ = 0)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

// A layer that was required to be a split graph is not one.
struct NotSplitError : std::runtime_error {
    int layer;
    explicit NotSplitError(int layer_)
        : std::runtime_error("layer " + std::to_string(layer_) + " is not a split graph"),
          layer(layer_) {}
};

// A layer that was required to be a (labeled) permutation graph is not one.
struct NotPermutationError : std::runtime_error {
    int layer;
    explicit NotPermutationError(int layer_)
        : std::runtime_error("layer " + std::to_string(layer_) +
                             " is not a permutation graph under the given labeling"),
          layer(layer_) {}
};

// An exhaustive oracle refused to run because a configured cap was exceeded.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No vertex cover exists under the exclusion constraints.
struct CoverInfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The terminals share a time-edge: no separator exists at any budget.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tempsep
