#include "doctest.h"

#include <random>
#include <set>

#include "graphaudit/ground_truth.hpp"
#include "graphaudit/metrics.hpp"
#include "test_oracles.hpp"

using namespace graphaudit;

namespace {

const Catalog& catalog() {
    static Catalog c = Catalog::load(GRAPHAUDIT_DATA_DIR);
    return c;
}

Graph k3() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Graph two_triangles() {
    return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// Mr. Hi's faction in the observed club split (0-indexed ids).
const std::set<int> kKarateFactionA = {0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 16, 17, 19, 21};

}  // namespace

TEST_CASE("density") {
    CHECK(density(catalog().get("karate")) == doctest::Approx(0.14).epsilon(0.04));
    CHECK(std::abs(density(catalog().get("karate")) - 0.14) <= 0.005);
    CHECK(density(k3()) == doctest::Approx(1.0));
    CHECK(std::abs(density(catalog().get("atlas:50")) - 0.8) <= 0.005);
    CHECK(density(Graph(0)) == 0.0);
    CHECK(density(Graph(1)) == 0.0);
}

TEST_CASE("density is relabeling-invariant and strictly increasing in edges") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = test_oracles::random_graph(rng, 9);
        const Graph h = test_oracles::permuted_copy(g, rng);
        CHECK(density(g) == doctest::Approx(density(h)));
        // add one absent edge if any
        const int n = g.node_count();
        bool added = false;
        const double before = density(g);
        for (int u = 0; u < n && !added; ++u)
            for (int v = u + 1; v < n && !added; ++v)
                if (!g.has_edge(u, v)) added = g.add_edge(u, v);
        if (added) CHECK(density(g) > before);
    }
}

TEST_CASE("degree assortativity") {
    const auto kc = degree_assortativity(catalog().get("karate"));
    REQUIRE(kc.has_value());
    CHECK(std::abs(*kc - (-0.48)) <= 0.005);

    const auto star = degree_assortativity(make_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    REQUIRE(star.has_value());
    CHECK(*star == doctest::Approx(-1.0).epsilon(1e-12));

    CHECK_FALSE(degree_assortativity(k3()).has_value());    // regular: zero variance
    CHECK_FALSE(degree_assortativity(Graph(3)).has_value());  // edgeless
}

TEST_CASE("label propagation: edgeless graph keeps singleton communities") {
    const auto partition = label_propagation_partition(Graph(3), 0);
    CHECK(partition == std::vector<int>{0, 1, 2});
}

TEST_CASE("label propagation: disjoint triangles settle into one community each") {
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 42ULL}) {
        const auto partition = label_propagation_partition(two_triangles(), seed);
        REQUIRE(partition.size() == 6);
        CHECK(partition[0] == partition[1]);
        CHECK(partition[1] == partition[2]);
        CHECK(partition[3] == partition[4]);
        CHECK(partition[4] == partition[5]);
        CHECK(partition[0] != partition[3]);
    }
}

TEST_CASE("label propagation on the karate club gives plausible modularity") {
    const Graph& kc = catalog().get("karate");
    const auto partition = label_propagation_partition(kc, 0);
    const auto q = modularity(kc, partition);
    REQUIRE(q.has_value());
    CHECK(*q >= 0.05);
    CHECK(*q <= 0.45);
}

TEST_CASE("label propagation is reproducible for a fixed seed") {
    const Graph& kc = catalog().get("karate");
    for (std::uint64_t seed : {0ULL, 7ULL, 123ULL})
        CHECK(label_propagation_partition(kc, seed) == label_propagation_partition(kc, seed));
}

TEST_CASE("modularity") {
    // all nodes in one community: exactly 0 for any graph with edges
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = test_oracles::random_graph(rng, 10);
        if (g.edge_count() == 0) continue;
        const auto q = modularity(g, std::vector<int>(static_cast<size_t>(g.node_count()), 0));
        REQUIRE(q.has_value());
        CHECK(*q == doctest::Approx(0.0).epsilon(1e-12));
    }

    // two disjoint triangles split by component
    const auto q2 = modularity(two_triangles(), {0, 0, 0, 1, 1, 1});
    REQUIRE(q2.has_value());
    CHECK(*q2 == doctest::Approx(0.5).epsilon(1e-12));

    // the observed two-faction split of the karate club
    const Graph& kc = catalog().get("karate");
    std::vector<int> factions;
    for (int v = 0; v < kc.node_count(); ++v)
        factions.push_back(kKarateFactionA.count(std::stoi(kc.label_or_id(v))) ? 0 : 1);
    const auto qkc = modularity(kc, factions);
    REQUIRE(qkc.has_value());
    CHECK(*qkc == doctest::Approx(0.3582347140039447).epsilon(1e-9));

    CHECK_FALSE(modularity(Graph(3), {0, 1, 2}).has_value());  // edgeless: undefined
    CHECK_THROWS_AS(modularity(k3(), {0, 0}), std::invalid_argument);
}

TEST_CASE("degseq distance examples") {
    const Graph& kc = catalog().get("karate");
    CHECK(degseq_distance(kc, kc) == 0.0);

    // K3 vs a single node: zero-padding rule
    CHECK(degseq_distance(k3(), make_graph(1, {})) == doctest::Approx(2.0 * std::sqrt(3.0)));

    // two extra disjoint edges between degree-2 nodes: four in-place +1s
    LabeledEdgeList raw;
    for (const auto& [u, v] : kc.edges())
        raw.push_back({kc.label_or_id(u), kc.label_or_id(v)});
    raw.push_back({"9", "12"});
    raw.push_back({"14", "15"});
    const Graph kc_plus2 = from_edge_list(raw).graph;
    CHECK(kc_plus2.edge_count() == 80);
    CHECK(degseq_distance(kc_plus2, kc) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("degseq distance is a pseudometric on small random graphs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph a = test_oracles::random_graph(rng, 8);
        const Graph b = test_oracles::random_graph(rng, 8);
        const Graph c = test_oracles::random_graph(rng, 8);
        const double ab = degseq_distance(a, b);
        const double ba = degseq_distance(b, a);
        CHECK(ab == doctest::Approx(ba));
        CHECK(ab >= 0.0);
        CHECK(degseq_distance(a, a) == 0.0);
        CHECK(degseq_distance(a, c) <= ab + degseq_distance(b, c) + 1e-9);
        // zero on isomorphic pairs (relabelings)
        const Graph ap = test_oracles::permuted_copy(a, rng);
        CHECK(degseq_distance(a, ap) == 0.0);
    }
}

TEST_CASE("compute_metrics fills the whole record") {
    const Graph& kc = catalog().get("karate");
    const MetricsRecord r = compute_metrics(kc, kc, 0);
    CHECK(r.node_count == 34);
    CHECK(r.edge_count == 78);
    CHECK(std::abs(r.density - 0.14) <= 0.005);
    REQUIRE(r.assortativity.has_value());
    CHECK(std::abs(*r.assortativity - (-0.48)) <= 0.005);
    REQUIRE(r.modularity.has_value());
    CHECK(r.degseq_distance == 0.0);
}
