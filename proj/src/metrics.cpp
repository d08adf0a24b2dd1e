#include "graphaudit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace graphaudit {

namespace {

// Rejection sampling keeps the draw sequence independent of the standard
// library's distribution internals, so seeded runs replay identically
// everywhere.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % n;
}

void shuffle_ids(std::vector<int>& ids, std::mt19937_64& rng) {
    for (size_t i = ids.size(); i > 1; --i)
        std::swap(ids[i - 1], ids[uniform_below(rng, i)]);
}

}  // namespace

double density(const Graph& g) {
    const double n = g.node_count();
    if (n <= 1) return 0.0;
    return 2.0 * g.edge_count() / (n * (n - 1.0));
}

std::optional<double> degree_assortativity(const Graph& g) {
    if (g.edge_count() == 0) return std::nullopt;
    // Both orientations of every edge; x and y then share moments.
    double sum = 0.0, sum_sq = 0.0, sum_xy = 0.0;
    const double m2 = 2.0 * g.edge_count();
    for (const auto& [u, v] : g.edges()) {
        const double du = g.degree(u);
        const double dv = g.degree(v);
        sum += du + dv;
        sum_sq += du * du + dv * dv;
        sum_xy += 2.0 * du * dv;
    }
    const double mean = sum / m2;
    const double variance = sum_sq / m2 - mean * mean;
    const double covariance = sum_xy / m2 - mean * mean;
    if (variance <= 1e-12) return std::nullopt;
    return covariance / variance;
}

std::vector<int> label_propagation_partition(const Graph& g, std::uint64_t seed) {
    const int n = g.node_count();
    std::vector<int> labels(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) labels[static_cast<size_t>(v)] = v;

    std::mt19937_64 rng(seed);
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;

    std::vector<int> count(static_cast<size_t>(n), 0);
    std::vector<int> touched;
    std::vector<int> best;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        shuffle_ids(order, rng);
        bool changed = false;
        for (int v : order) {
            if (g.degree(v) == 0) continue;
            touched.clear();
            for (int w : g.neighbors(v)) {
                const int lw = labels[static_cast<size_t>(w)];
                if (count[static_cast<size_t>(lw)] == 0) touched.push_back(lw);
                ++count[static_cast<size_t>(lw)];
            }
            int best_count = 0;
            for (int l : touched) best_count = std::max(best_count, count[static_cast<size_t>(l)]);
            best.clear();
            for (int l : touched)
                if (count[static_cast<size_t>(l)] == best_count) best.push_back(l);
            std::sort(best.begin(), best.end());
            for (int l : touched) count[static_cast<size_t>(l)] = 0;

            const int current = labels[static_cast<size_t>(v)];
            if (std::binary_search(best.begin(), best.end(), current)) continue;
            labels[static_cast<size_t>(v)] =
                best[static_cast<size_t>(uniform_below(rng, best.size()))];
            changed = true;
        }
        if (!changed) break;
    }

    // compact community ids in first-appearance order
    std::vector<int> remap(static_cast<size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int& r = remap[static_cast<size_t>(labels[static_cast<size_t>(v)])];
        if (r == -1) r = next++;
        labels[static_cast<size_t>(v)] = r;
    }
    return labels;
}

std::optional<double> modularity(const Graph& g, const std::vector<int>& partition) {
    const int n = g.node_count();
    if (static_cast<int>(partition.size()) != n)
        throw std::invalid_argument("modularity: partition must cover all nodes");
    int communities = 0;
    for (int c : partition) {
        if (c < 0) throw std::invalid_argument("modularity: negative community id");
        communities = std::max(communities, c + 1);
    }
    const double m = g.edge_count();
    if (m == 0) return std::nullopt;

    std::vector<double> intra(static_cast<size_t>(communities), 0.0);
    std::vector<double> total_degree(static_cast<size_t>(communities), 0.0);
    for (const auto& [u, v] : g.edges()) {
        if (partition[static_cast<size_t>(u)] == partition[static_cast<size_t>(v)])
            intra[static_cast<size_t>(partition[static_cast<size_t>(u)])] += 1.0;
    }
    for (int v = 0; v < n; ++v)
        total_degree[static_cast<size_t>(partition[static_cast<size_t>(v)])] += g.degree(v);

    double q = 0.0;
    for (int c = 0; c < communities; ++c) {
        const double dc = total_degree[static_cast<size_t>(c)] / (2.0 * m);
        q += intra[static_cast<size_t>(c)] / m - dc * dc;
    }
    return q;
}

double degseq_distance(const Graph& g, const Graph& ref) {
    std::vector<int> a = degree_sequence(g);
    std::vector<int> b = degree_sequence(ref);
    const size_t len = std::max(a.size(), b.size());
    a.resize(len, 0);
    b.resize(len, 0);
    double sum_sq = 0.0;
    for (size_t i = 0; i < len; ++i) {
        const double d = a[i] - b[i];
        sum_sq += d * d;
    }
    return std::sqrt(sum_sq);
}

MetricsRecord compute_metrics(const Graph& g, const Graph& ref, std::uint64_t seed) {
    MetricsRecord record;
    record.node_count = g.node_count();
    record.edge_count = g.edge_count();
    record.density = density(g);
    record.assortativity = degree_assortativity(g);
    record.modularity = modularity(g, label_propagation_partition(g, seed));
    record.degseq_distance = degseq_distance(g, ref);
    return record;
}

}  // namespace graphaudit
