#include "doctest.h"

#include <random>

#include "indep/analysis.hpp"
#include "indep/error.hpp"
#include "support.hpp"

using namespace indep;
using namespace testing_support;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
    return Graph::from_edges(a + b, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return Graph::from_edges(10, edges);
}

/// Hamiltonicity by dynamic programming over vertex subsets.
bool held_karp(const oracle::Adj& a) {
    const std::size_t n = a.size();
    if (n < 3) return false;
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);  // bit v: path 0 -> v covering mask
    reach[1] = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2)
        for (std::size_t v = 0; v < n; ++v) {
            if (!((reach[mask] >> v) & 1u)) continue;
            for (std::size_t w = 0; w < n; ++w)
                if (a[v][w] && !((mask >> w) & 1u)) reach[mask | (1u << w)] |= 1u << w;
        }
    const std::uint32_t full = (1u << n) - 1;
    for (std::size_t v = 1; v < n; ++v)
        if (((reach[full] >> v) & 1u) && a[v][0]) return true;
    return false;
}

void check_planarity(const Graph& g) {
    const auto r = is_planar(g);
    CHECK(r.planar == oracle::planar(adjacency(g)));
    if (r.planar)
        CHECK(validate_embedding(g, r.rotation));
    else if (!r.decided_by_edge_bound)
        CHECK(classify_kuratowski(g, r.kuratowski) != Obstruction::None);
}

void check_hamilton(const Graph& g) {
    if (g.vertex_count() < 3) return;
    const auto a = adjacency(g);
    const bool expected = g.vertex_count() <= 9 ? oracle::hamiltonian(a) : held_karp(a);
    const auto h = hamiltonian_cycle(g);
    REQUIRE(h.status != HamiltonStatus::Unknown);
    CHECK((h.status == HamiltonStatus::Yes) == expected);
    if (h.status == HamiltonStatus::Yes) CHECK(is_hamiltonian_cycle(g, h.cycle));
    if (!h.cut.empty()) CHECK(components_without(g, h.cut) > h.cut.size());
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("the two Hamiltonian oracles agree") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(rng, 3 + trial % 7, 0.45);
        const auto a = adjacency(g);
        CHECK(oracle::hamiltonian(a) == held_karp(a));
    }
}

TEST_CASE("random graphs against the oracles") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 10);
        const double p = 0.2 + 0.6 * (trial % 7) / 6.0;
        const auto g = random_graph(rng, n, p);
        CAPTURE(trial);
        const auto a = adjacency(g);
        CHECK(components(g).count() == oracle::component_count(a));
        check_planarity(g);
        const auto w = clique_number(g);
        CHECK(w.size == oracle::clique_number(a));
        for (Vertex u : w.witness)
            for (Vertex v : w.witness)
                if (u != v) CHECK(g.adjacent(u, v));
        const auto al = independence_number(g);
        CHECK(al.size == oracle::clique_number(oracle::complement(a)));
        for (Vertex u : al.witness)
            for (Vertex v : al.witness)
                if (u != v) CHECK(!g.adjacent(u, v));
        check_hamilton(g);
    }
}

TEST_CASE("named graphs") {
    CHECK(is_planar(complete(4)).planar);
    CHECK(!is_planar(complete(5)).planar);
    CHECK(classify_kuratowski(complete(5), is_planar(complete(5)).kuratowski) == Obstruction::K5);
    const auto k33 = complete_bipartite(3, 3);
    const auto r = is_planar(k33);
    CHECK(!r.planar);
    CHECK(classify_kuratowski(k33, r.kuratowski) == Obstruction::K33);
    check_planarity(petersen());
    CHECK(hamiltonian_cycle(petersen()).status == HamiltonStatus::No);
    CHECK(hamiltonian_cycle(complete_bipartite(3, 4)).status == HamiltonStatus::No);
    CHECK(hamiltonian_cycle(complete_bipartite(4, 4)).status == HamiltonStatus::Yes);
    CHECK(clique_number(complete(7)).size == 7);
    CHECK(independence_number(complete_bipartite(3, 5)).size == 5);
}

TEST_CASE("multipartite recognition") {
    const auto r = recognize_complete_multipartite(complete_bipartite(2, 3));
    REQUIRE(r.parts);
    CHECK(*r.parts == std::vector<std::size_t>{2, 3});
    // a path on three vertices plus an isolated vertex is not complete multipartite
    const auto p = Graph::from_edges(4, {{0, 1}, {1, 2}});
    const auto q = recognize_complete_multipartite(p);
    CHECK(!q.parts);
    REQUIRE(q.violation);
    const auto [a, b, c] = *q.violation;
    CHECK(!p.adjacent(a, b));
    CHECK(!p.adjacent(b, c));
    CHECK(p.adjacent(a, c));
}

TEST_CASE("group graphs of order at most 12 against the oracles") {
    for (const auto& [name, g] : catalog_groups(12)) {
        CAPTURE(name);
        SubgroupLattice lat(g);
        const auto om = enumerate_min_gen_sets(lat);
        for (bool induced : {false, true}) {
            const auto ig = build_graph(g, om, GraphKind::Full, 0, induced);
            check_planarity(ig.graph);
            if (induced) check_hamilton(ig.graph);
            const auto a = adjacency(ig.graph);
            CHECK(clique_number(ig.graph).size == oracle::clique_number(a));
        }
    }
}

TEST_CASE("degree profile by class") {
    auto g = make_named_group("symmetric(4)");
    SubgroupLattice lat(g);
    const auto gamma = build_graph(lat, GraphKind::Full, 0, false);
    const auto classes = class_partition(g);
    const auto prof = degree_profile(gamma, &classes);
    REQUIRE(prof.by_class.size() == classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        classes[c].for_each([&](Element x) { CHECK(prof.by_vertex[x] == *prof.by_class[c]); });

    // one class holding elements of different degrees
    std::vector<ElementSet> bad{g.all()};
    try {
        degree_profile(gamma, &bad);
        FAIL("expected ClassDegreeMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ClassDegreeMismatch);
        CHECK(e.witness().size() == 2);
    }
}

TEST_CASE("analyze bundles the results") {
    SubgroupLattice lat(make_named_group("cyclic(15)"));
    const auto delta = build_graph(lat, GraphKind::Full, 0, true);
    const auto rep = analyze(delta);
    CHECK(rep.vertex_count == 6);
    CHECK(rep.edge_count == 8);
    CHECK(rep.components.count() == 1);
    CHECK(rep.planarity.planar);
    CHECK(rep.clique.size == 2);
    CHECK(rep.independent.size == 4);
    REQUIRE(rep.hamilton);
    CHECK(rep.hamilton->status == HamiltonStatus::No);
}

}  // TEST_SUITE
