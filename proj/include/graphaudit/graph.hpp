#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace graphaudit {

/// One raw edge as it appeared in some source text: a pair of opaque labels.
/// Raw lists may contain duplicates and self-loops; cleanup happens on
/// conversion to a Graph.
struct LabeledEdge {
    std::string a;
    std::string b;

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

using LabeledEdgeList = std::vector<LabeledEdge>;

/// Label -> node id map produced while normalizing a raw edge list.
/// Injective and total over the labels appearing in the source list.
using Relabeling = std::map<std::string, int>;

struct CleanupReport {
    int self_loops = 0;
    int duplicate_edges = 0;

    friend bool operator==(const CleanupReport&, const CleanupReport&) = default;
};

/// Undirected simple graph over node ids 0..n-1. No self-loops, no duplicate
/// edges, symmetric adjacency. Immutable once built; cheap to copy and safe
/// to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adjacency_(static_cast<size_t>(n)) {}

    /// Adds an undirected edge. Self-loops and already-present edges are
    /// rejected (returns false), keeping the simple-graph invariants.
    bool add_edge(int u, int v);

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<size_t>(v)].size()); }

    /// Neighbor ids of v, sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<size_t>(v)]; }

    /// Edges in insertion order, endpoints as first seen.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Original labels, one per id; empty when the graph was built without labels.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    /// Label of v, falling back to the decimal id when no labels are attached.
    std::string label_or_id(int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
};

/// Convenience builder for tests and bundled data: n nodes plus id edges.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

struct FromEdgeListResult {
    Graph graph;
    Relabeling relabeling;
    CleanupReport report;
};

/// Builds a simple Graph from a raw labeled edge list. Node ids are assigned
/// by first appearance; self-loops and duplicate (unordered) edges are
/// dropped and counted. Total: never fails, empty input gives the empty graph.
FromEdgeListResult from_edge_list(const LabeledEdgeList& raw);

/// Degrees sorted descending; length equals node_count.
std::vector<int> degree_sequence(const Graph& g);

/// Partition of 0..n-1 into connected components. Blocks are ordered by their
/// smallest member and each block is sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Exhaustive isomorphism test for small graphs. Requires
/// min(node counts) <= 8; throws std::invalid_argument above that bound.
bool is_isomorphic_small(const Graph& g1, const Graph& g2);

}  // namespace graphaudit
