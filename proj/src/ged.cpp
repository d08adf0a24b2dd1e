#include "graphaudit/ged.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace graphaudit {

namespace {

struct Search {
    const Graph& small;
    const Graph& large;
    std::uint64_t budget;

    int node_gap = 0;       // |V_large| - |V_small|, paid once up front
    int large_edges = 0;    // |E_large|
    std::vector<int> order;  // small-graph nodes, highest degree first

    std::vector<int> image;      // image[depth] = large node for order[depth]
    std::vector<char> used;      // large nodes already taken
    std::uint64_t explored = 0;
    bool budget_hit = false;

    int best = std::numeric_limits<int>::max();
    std::vector<int> best_image;

    Search(const Graph& s, const Graph& l, std::uint64_t b) : small(s), large(l), budget(b) {
        node_gap = large.node_count() - small.node_count();
        large_edges = large.edge_count();
        order.resize(static_cast<size_t>(small.node_count()));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int c) {
            if (small.degree(a) != small.degree(c)) return small.degree(a) > small.degree(c);
            return a < c;
        });
        image.assign(order.size(), -1);
        used.assign(static_cast<size_t>(large.node_count()), 0);
    }

    // Admissible lower bound on the edit cost still to come: optimal
    // matching of remaining degree sequences (sorted matching is optimal for
    // absolute differences), halved because one edge edit can serve two
    // endpoints. Unimaged large nodes pair against implicit degree-0 rows.
    int remaining_bound(size_t depth) const {
        std::vector<int> ds;
        for (size_t k = depth; k < order.size(); ++k) ds.push_back(small.degree(order[k]));
        std::vector<int> dl;
        for (int v = 0; v < large.node_count(); ++v)
            if (!used[static_cast<size_t>(v)]) dl.push_back(large.degree(v));
        std::sort(ds.begin(), ds.end(), std::greater<>());
        std::sort(dl.begin(), dl.end(), std::greater<>());
        ds.resize(dl.size(), 0);
        int sum = 0;
        for (size_t i = 0; i < dl.size(); ++i) sum += std::abs(ds[i] - dl[i]);
        return (sum + 1) / 2;
    }

    void run() {
        dfs(0, 0, 0);
    }

    // g_cost: edge mismatches among already-assigned pairs.
    // image_edges: large-graph edges with both endpoints imaged.
    void dfs(size_t depth, int g_cost, int image_edges) {
        if (budget_hit) return;
        if (++explored > budget) {
            budget_hit = true;
            return;
        }
        if (depth == order.size()) {
            const int total = node_gap + g_cost + (large_edges - image_edges);
            if (total < best) {
                best = total;
                best_image = image;
            }
            return;
        }
        if (node_gap + g_cost + remaining_bound(depth) >= best) return;

        const int u = order[depth];
        struct Child {
            int v;
            int delta_cost;
            int delta_image_edges;
        };
        std::vector<Child> children;
        children.reserve(static_cast<size_t>(large.node_count()));
        for (int v = 0; v < large.node_count(); ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            int mismatches = 0;
            int matched_edges = 0;
            for (size_t j = 0; j < depth; ++j) {
                const bool e1 = small.has_edge(u, order[j]);
                const bool e2 = large.has_edge(v, image[j]);
                mismatches += e1 != e2;
                matched_edges += e2;
            }
            children.push_back({v, mismatches, matched_edges});
        }
        std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
            if (a.delta_cost != b.delta_cost) return a.delta_cost < b.delta_cost;
            return a.v < b.v;
        });
        for (const Child& child : children) {
            if (budget_hit) return;
            image[depth] = child.v;
            used[static_cast<size_t>(child.v)] = 1;
            dfs(depth + 1, g_cost + child.delta_cost, image_edges + child.delta_image_edges);
            used[static_cast<size_t>(child.v)] = 0;
            image[depth] = -1;
        }
    }
};

}  // namespace

GedResult graph_edit_distance(const Graph& g1, const Graph& g2, const GedOptions& options) {
    const bool swapped = g1.node_count() > g2.node_count();
    const Graph& small = swapped ? g2 : g1;
    const Graph& large = swapped ? g1 : g2;

    Search search(small, large, options.expansion_budget);
    search.run();

    GedResult result;
    result.explored_nodes = search.explored;
    result.exact = !search.budget_hit;
    if (search.best == std::numeric_limits<int>::max()) {
        // Budget too small even for one complete mapping; fall back to the
        // trivial edit script (drop everything, build everything).
        result.distance = small.edge_count() + large.edge_count() + search.node_gap;
        result.exact = false;
        return result;
    }
    result.distance = search.best;

    std::vector<std::pair<int, int>> mapping;
    mapping.reserve(search.order.size());
    for (size_t k = 0; k < search.order.size(); ++k) {
        const int s = search.order[k];
        const int l = search.best_image[k];
        mapping.emplace_back(swapped ? l : s, swapped ? s : l);
    }
    std::sort(mapping.begin(), mapping.end());
    result.mapping = std::move(mapping);
    return result;
}

}  // namespace graphaudit
