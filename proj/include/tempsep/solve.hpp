#pragma once

#include <optional>
#include <string>

#include "tempsep/util.hpp"

namespace tempsep {

// Outcome of a separator search. Infeasible means the terminals share a
// time-edge, so no separator exists at any budget; NotFound means no
// separator within the given budget k.
enum class SolveStatus { Found, NotFound, Infeasible };

struct SolveResult {
    SolveStatus status = SolveStatus::NotFound;
    std::optional<VertexSet> witness;  // present iff status == Found

    bool yes() const { return status == SolveStatus::Found; }
};

inline SolveResult solve_found(VertexSet w) { return {SolveStatus::Found, std::move(w)}; }
inline SolveResult solve_not_found() { return {SolveStatus::NotFound, std::nullopt}; }
inline SolveResult solve_infeasible() { return {SolveStatus::Infeasible, std::nullopt}; }

}  // namespace tempsep
