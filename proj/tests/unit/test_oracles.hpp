#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately brute-force so they cannot share bugs with the production
// search/metric code they check.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "graphaudit/graph.hpp"

namespace test_oracles {

/// Unit-cost graph edit distance by exhaustive enumeration of all injective
/// mappings of the smaller node set into the larger. Feasible up to ~8 nodes.
inline int ged_exhaustive(const graphaudit::Graph& g1, const graphaudit::Graph& g2) {
    const bool swapped = g1.node_count() > g2.node_count();
    const graphaudit::Graph& s = swapped ? g2 : g1;
    const graphaudit::Graph& l = swapped ? g1 : g2;
    const int ns = s.node_count();
    const int nl = l.node_count();

    std::vector<int> candidates(static_cast<size_t>(nl));
    std::iota(candidates.begin(), candidates.end(), 0);

    int best = s.edge_count() + l.edge_count() + (nl - ns);
    std::vector<int> image(static_cast<size_t>(ns), -1);
    std::vector<char> used(static_cast<size_t>(nl), 0);

    auto cost_of_complete = [&]() {
        int cost = nl - ns;
        for (const auto& [u, v] : s.edges())
            if (!l.has_edge(image[static_cast<size_t>(u)], image[static_cast<size_t>(v)])) ++cost;
        for (const auto& [a, b] : l.edges()) {
            bool a_imaged = false, b_imaged = false;
            int pre_a = -1, pre_b = -1;
            for (int u = 0; u < ns; ++u) {
                if (image[static_cast<size_t>(u)] == a) {
                    a_imaged = true;
                    pre_a = u;
                }
                if (image[static_cast<size_t>(u)] == b) {
                    b_imaged = true;
                    pre_b = u;
                }
            }
            if (!a_imaged || !b_imaged)
                ++cost;  // edge touches an inserted node
            else if (!s.has_edge(pre_a, pre_b))
                ++cost;  // edge inserted between mapped nodes
        }
        return cost;
    };

    // depth-first over all P(nl, ns) injections, no pruning
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == ns) {
            best = std::min(best, cost_of_complete());
            return;
        }
        for (int v = 0; v < nl; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = 1;
            image[static_cast<size_t>(depth)] = v;
            self(self, depth + 1);
            image[static_cast<size_t>(depth)] = -1;
            used[static_cast<size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
    return best;
}

/// Spearman rho as the plain Pearson correlation of rank vectors.
inline double pearson_on_ranks(const std::vector<double>& ranks_a,
                               const std::vector<double>& ranks_b) {
    const double n = static_cast<double>(ranks_a.size());
    double ma = 0, mb = 0;
    for (size_t i = 0; i < ranks_a.size(); ++i) {
        ma += ranks_a[i];
        mb += ranks_b[i];
    }
    ma /= n;
    mb /= n;
    double cov = 0, va = 0, vb = 0;
    for (size_t i = 0; i < ranks_a.size(); ++i) {
        const double da = ranks_a[i] - ma;
        const double db = ranks_b[i] - mb;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    return cov / std::sqrt(va * vb);
}

/// Erdos-Renyi-style random graph on n nodes, deterministic in the rng state.
inline graphaudit::Graph random_graph(std::mt19937_64& rng, int max_nodes, double edge_prob = 0.4) {
    const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_nodes + 1));
    graphaudit::Graph g(n);
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(edge_prob * static_cast<double>(std::mt19937_64::max()));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold) g.add_edge(u, v);
    return g;
}

/// Relabels g by a random node permutation.
inline graphaudit::Graph permuted_copy(const graphaudit::Graph& g, std::mt19937_64& rng) {
    const int n = g.node_count();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    graphaudit::Graph out(n);
    for (const auto& [u, v] : g.edges())
        out.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return out;
}

}  // namespace test_oracles
