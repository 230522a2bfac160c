#pragma once

#include "dmi/graph.hpp"

namespace dmi {

// Certificate that no perfect matching exists: a left set X with |Gamma(X)| < |X|.
struct HallViolator {
    std::vector<int> left;       // X+ (left vertex ids)
    std::vector<int> neighbors;  // Gamma(X+)
};

struct NoPerfectMatchingError : Error {
    HallViolator violator;
    explicit NoPerfectMatchingError(HallViolator v)
        : Error("no perfect matching"), violator(std::move(v)) {}
};

// Maximum-cardinality matching, Hopcroft-Karp. Deterministic for a fixed
// input edge order.
Matching max_matching(const BipartiteGraph& g);

// Hall violator witnessing that the given maximum matching is not perfect.
// Pre: m is a maximum matching of g with m.size() < g.n().
HallViolator hall_violator(const BipartiteGraph& g, const Matching& m);

// Minimum-weight perfect matching via successive shortest paths with
// potentials. Ties are broken toward the lexicographically smallest sorted
// edge-id sequence. Throws NoPerfectMatchingError when infeasible.
Matching min_weight_perfect_matching(const BipartiteGraph& g);

}  // namespace dmi
