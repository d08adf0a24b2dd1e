#include "graphaudit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graphaudit {

bool Graph::add_edge(int u, int v) {
    if (u == v) return false;
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
        throw std::out_of_range("add_edge: node id out of range");
    auto& adj_u = adjacency_[static_cast<size_t>(u)];
    auto pos = std::lower_bound(adj_u.begin(), adj_u.end(), v);
    if (pos != adj_u.end() && *pos == v) return false;
    adj_u.insert(pos, v);
    auto& adj_v = adjacency_[static_cast<size_t>(v)];
    adj_v.insert(std::lower_bound(adj_v.begin(), adj_v.end(), u), u);
    edges_.emplace_back(u, v);
    return true;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) return false;
    const auto& adj_u = adjacency_[static_cast<size_t>(u)];
    return std::binary_search(adj_u.begin(), adj_u.end(), v);
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != node_count())
        throw std::invalid_argument("set_labels: one label per node required");
    labels_ = std::move(labels);
}

std::string Graph::label_or_id(int v) const {
    if (!labels_.empty()) return labels_[static_cast<size_t>(v)];
    return std::to_string(v);
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

FromEdgeListResult from_edge_list(const LabeledEdgeList& raw) {
    FromEdgeListResult result;
    std::vector<std::string> labels;
    auto id_of = [&](const std::string& label) {
        auto it = result.relabeling.find(label);
        if (it != result.relabeling.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(label);
        result.relabeling.emplace(label, id);
        return id;
    };

    std::vector<std::pair<int, int>> id_edges;
    int loops = 0;
    for (const auto& e : raw) {
        int u = id_of(e.a);
        int v = id_of(e.b);
        if (u == v) {
            ++loops;
            continue;
        }
        id_edges.emplace_back(u, v);
    }

    Graph g(static_cast<int>(labels.size()));
    int dups = 0;
    for (const auto& [u, v] : id_edges)
        if (!g.add_edge(u, v)) ++dups;
    if (!labels.empty()) g.set_labels(std::move(labels));

    result.graph = std::move(g);
    result.report = CleanupReport{loops, dups};
    return result;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degrees(static_cast<size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) degrees[static_cast<size_t>(v)] = g.degree(v);
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return degrees;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> component(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> blocks;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (component[static_cast<size_t>(start)] != -1) continue;
        int c = static_cast<int>(blocks.size());
        blocks.emplace_back();
        stack.push_back(start);
        component[static_cast<size_t>(start)] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            blocks[static_cast<size_t>(c)].push_back(v);
            for (int w : g.neighbors(v)) {
                if (component[static_cast<size_t>(w)] == -1) {
                    component[static_cast<size_t>(w)] = c;
                    stack.push_back(w);
                }
            }
        }
        std::sort(blocks[static_cast<size_t>(c)].begin(), blocks[static_cast<size_t>(c)].end());
    }
    return blocks;
}

bool is_isomorphic_small(const Graph& g1, const Graph& g2) {
    const int n1 = g1.node_count();
    const int n2 = g2.node_count();
    if (std::min(n1, n2) > 8)
        throw std::invalid_argument("is_isomorphic_small: exhaustive search limited to 8 nodes");
    if (n1 != n2 || g1.edge_count() != g2.edge_count()) return false;
    if (degree_sequence(g1) != degree_sequence(g2)) return false;

    std::vector<int> perm(static_cast<size_t>(n1));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& [u, v] : g1.edges()) {
            if (!g2.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace graphaudit
