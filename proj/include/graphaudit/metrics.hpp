#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphaudit/graph.hpp"

namespace graphaudit {

/// 2|E| / (|V| (|V|-1)); 0 for graphs with fewer than two nodes.
double density(const Graph& g);

/// Pearson correlation of endpoint degrees over the edge multiset, both
/// orientations counted. Empty when undefined: edgeless graphs and graphs
/// with zero degree variance over edge endpoints (e.g. regular graphs).
std::optional<double> degree_assortativity(const Graph& g);

/// Asynchronous label propagation. Every node starts with its own label;
/// nodes are swept in seeded-shuffled order, each adopting the most frequent
/// neighbor label (seeded uniform tie-break, current label kept when already
/// maximal) until a sweep changes nothing or 100 sweeps elapse.
/// Deterministic given (g, seed). Returns one community id per node,
/// compacted in first-appearance order.
std::vector<int> label_propagation_partition(const Graph& g, std::uint64_t seed);

/// Newman modularity Q = sum_c [ e_c/m - (d_c/(2m))^2 ] over the given node
/// partition (community id per node). Empty for edgeless graphs; throws
/// std::invalid_argument when the partition does not cover all nodes.
std::optional<double> modularity(const Graph& g, const std::vector<int>& partition);

/// l2 distance between descending degree sequences, the shorter zero-padded.
double degseq_distance(const Graph& g, const Graph& ref);

/// One row of the per-graph statistics table.
struct MetricsRecord {
    int node_count = 0;
    int edge_count = 0;
    double density = 0.0;
    std::optional<double> assortativity;
    std::optional<double> modularity;
    double degseq_distance = 0.0;
};

/// All statistics of g compared against a reference graph, with the
/// modularity partition produced by seeded label propagation.
MetricsRecord compute_metrics(const Graph& g, const Graph& ref, std::uint64_t seed);

}  // namespace graphaudit
