#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphaudit/graph.hpp"

namespace graphaudit {

struct GedOptions {
    /// Search-state visit limit. Exhaustion turns the result into a flagged
    /// upper bound instead of an unbounded search.
    std::uint64_t expansion_budget = 10'000'000;
};

struct GedResult {
    /// Total unit-cost edit script length (node/edge insertion and deletion
    /// each cost 1, substitutions are free: labels are ignored).
    int distance = 0;
    /// True when the search proved the distance minimal.
    bool exact = true;
    std::uint64_t explored_nodes = 0;
    /// Witness correspondence (g1 id, g2 id) for the best mapping found.
    std::optional<std::vector<std::pair<int, int>>> mapping;
};

/// Exact graph edit distance up to isomorphism, by depth-first
/// branch-and-bound over injective assignments of the smaller graph's nodes
/// into the larger's, pruned with an admissible sorted-degree-matching lower
/// bound. Mapping every node of the smaller graph is always optimal under
/// unit costs, so deletion branches are never needed. When the budget runs
/// out the best mapping found so far is returned with exact = false.
GedResult graph_edit_distance(const Graph& g1, const Graph& g2, const GedOptions& options = {});

}  // namespace graphaudit
