#include <doctest.h>

#include <cstdlib>
#include <set>

#include "arcloc/classes.hpp"
#include "arcloc/errors.hpp"
#include "arcloc/generators.hpp"
#include "arcloc/io.hpp"
#include "arcloc/oracles.hpp"
#include "arcloc/structure.hpp"
#include "brute.hpp"

using namespace arcloc;

namespace {

UndirectedGraph to_graph(const brute::Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if ((g.adj[u] >> v) & 1u) edges.emplace_back(u, v);
    return UndirectedGraph(g.n, edges);
}

UndirectedGraph cycle_graph(int k) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return UndirectedGraph(k, edges);
}

}  // namespace

TEST_CASE("enumeration counts and bijection") {
    CHECK(digraph_count(2) == 4);
    CHECK(digraph_count(3) == 64);
    CHECK(digraph_count(4) == 4096);
    CHECK(digraph_count(5) == 1048576);
    CHECK_THROWS_AS(digraph_count(6), std::invalid_argument);

    for (int n = 2; n <= 4; ++n) {
        std::set<std::string> seen;
        const auto visited = enumerate_digraphs({.n = n}, [&](std::uint64_t i, const Digraph& d) {
            REQUIRE(digraph_index(d) == i);
            seen.insert(to_edge_list(d));
        });
        CHECK(visited == digraph_count(n));
        CHECK(seen.size() == digraph_count(n));
    }
    // digit meaning: pair (0,1) is the lowest digit
    CHECK(digraph_from_index(3, 1) == Digraph(3, {{0, 1}}));
    CHECK(digraph_from_index(3, 2) == Digraph(3, {{1, 0}}));
    CHECK(digraph_from_index(3, 3) == Digraph(3, {{0, 1}, {1, 0}}));
    CHECK(digraph_from_index(3, 4) == Digraph(3, {{0, 2}}));
}

TEST_CASE("enumeration filters and ranges") {
    std::uint64_t connected = 0;
    enumerate_digraphs({.n = 3, .connected_only = true}, [&](std::uint64_t, const Digraph& d) {
        CHECK(is_connected(d));
        ++connected;
    });
    // connected labelled graphs on 3 vertices: 4, each edge in 3 arc states
    CHECK(connected == 3 * 9 + 27);
    const auto part = enumerate_digraphs({.n = 4, .begin = 100, .end = 200}, [](std::uint64_t, const Digraph&) {});
    CHECK(part == 100);
    const auto filtered = enumerate_digraphs(
        {.n = 3, .filter = [](const Digraph& d) { return d.arc_count() == 0; }}, [](std::uint64_t, const Digraph&) {});
    CHECK(filtered == 1);
    CHECK_THROWS_AS(enumerate_digraphs({.n = 6}, [](std::uint64_t, const Digraph&) {}), std::invalid_argument);
}

TEST_CASE("extended cycle construction") {
    const auto fig = make_extended_cycle({2, 1, 3, 2, 1});
    CHECK(fig.digraph.order() == 9);
    CHECK(fig.digraph.arc_count() == 2 * 1 + 1 * 3 + 3 * 2 + 2 * 1 + 1 * 2);
    CHECK(fig.certificate.part_sizes() == std::vector<int>{2, 1, 3, 2, 1});
    CHECK(make_extended_cycle({1, 1, 1, 1, 1}).digraph == directed_cycle(5));
    CHECK_THROWS_AS(make_extended_cycle({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_extended_cycle({1, 0, 1}), std::invalid_argument);
}

TEST_CASE("composition and extension") {
    const Digraph ext = make_extension(Digraph(2, {{0, 1}}), {2, 3});
    CHECK(ext.order() == 5);
    CHECK(ext.arc_count() == 6);
    CHECK(set_relation(ext, VertexSet{0, 1}, VertexSet{2, 3, 4}).strictly_dominates);

    const Digraph part = directed_cycle(4);
    CHECK(compose(Digraph(1, {}), {part}) == part);
    CHECK_THROWS_AS(compose(Digraph(2, {}), {part}), std::invalid_argument);

    const Digraph c = compose(Digraph(2, {{0, 1}}), {directed_path(2), directed_path(2)});
    CHECK(c.arc_count() == 1 + 1 + 4);

    Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> sizes(static_cast<std::size_t>(rng.between(3, 9)));
        for (int& s : sizes) s = rng.between(1, 4);
        const auto ec = make_extended_cycle(sizes);
        REQUIRE(make_extension(directed_cycle(static_cast<int>(sizes.size())), sizes) == ec.digraph);
        const auto cert = recognize_extended_cycle(ec.digraph);
        REQUIRE(cert);
        REQUIRE(*cert == ec.certificate);
    }
}

TEST_CASE("random models are reproducible") {
    const RandomModel m{6, 0.5, 0.1, 0xC0FFEE};
    CHECK(to_edge_list(random_digraph(m)) == to_edge_list(random_digraph(m)));
    const Digraph full = random_digraph(RandomModel{5, 1.0, 1.0, 3});
    CHECK(full.arc_count() == 20);
    CHECK(random_digraph(RandomModel{5, 0.0, 0.0, 3}).arc_count() == 0);
    CHECK_THROWS_AS(random_digraph(RandomModel{5, 1.5, 0.0, 3}), std::invalid_argument);

    Rng a(9), b(9);
    for (int i = 0; i < 100; ++i) CHECK(a.between(0, 1000) == b.between(0, 1000));
}

TEST_CASE("class members") {
    const auto m = random_class_member(RandomModel{8, 0.3, 0.05, 21}, ClassKind::in_semicomplete, 5000);
    REQUIRE(m);
    CHECK_FALSE(find_pattern_violation(*m, Pattern::h1));

    Rng rng(1);
    for (int t = 0; t < 300; ++t) {
        const int n = rng.between(6, 10);
        for (ClassKind kind :
             {ClassKind::in_semicomplete, ClassKind::out_semicomplete, ClassKind::arc_locally_semicomplete}) {
            const Digraph d = random_connected_member(n, kind, rng);
            REQUIRE(d.order() == n);
            REQUIRE(in_class(d, kind));
            REQUIRE(is_connected(d));
            REQUIRE(in_class(random_structured_member(n, kind, rng), kind));
            REQUIRE(in_class(complete_violations(random_digraph(n, 0.4, 0.0, rng), kind, rng), kind));
        }
    }
}

TEST_CASE("perfection oracle on named graphs") {
    const auto c5 = brute_force_is_perfect(underlying_graph(directed_cycle(5)));
    CHECK_FALSE(c5.perfect);
    CHECK(c5.obstruction == Obstruction::odd_hole);
    CHECK(c5.cycle.size() == 5);

    std::vector<std::pair<Vertex, Vertex>> k5;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
    CHECK(brute_force_is_perfect(UndirectedGraph(5, k5)).perfect);

    const auto anti = brute_force_is_perfect(cycle_graph(7).complement());
    CHECK_FALSE(anti.perfect);
    CHECK(anti.obstruction == Obstruction::odd_antihole);
    CHECK(anti.cycle.size() == 7);

    CHECK(brute_force_is_perfect(cycle_graph(6)).perfect);
    CHECK_FALSE(brute_force_is_perfect(cycle_graph(9)).perfect);
}

TEST_CASE("perfection oracle matches omega == chi on every graph, n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        const std::uint64_t total = 1ull << (n * (n - 1) / 2);
        for (std::uint64_t i = 0; i < total; ++i) {
            const brute::Graph g = brute::graph_from_index(n, i);
            REQUIRE(brute_force_is_perfect(to_graph(g)).perfect == brute::perfect_by_definition(g));
        }
    }
}

TEST_CASE("clique cut oracle") {
    const auto path = brute_force_has_clique_cut(directed_path(3));
    REQUIRE(path);
    CHECK(path->cut == VertexSet{1});
    CHECK_FALSE(brute_force_has_clique_cut(directed_cycle(5)));

    std::vector<Arc> arcs = directed_cycle(5).arcs();
    for (Vertex v = 0; v < 5; ++v) arcs.push_back({5, v});
    arcs.push_back({5, 6});
    const auto cut = brute_force_has_clique_cut(Digraph(7, arcs));
    REQUIRE(cut);
    CHECK(cut->cut == VertexSet{5});

    Rng rng(6);
    for (int t = 0; t < 300; ++t) {
        const Digraph d = random_digraph(rng.between(2, 8), 0.35, 0.1, rng);
        if (const auto c = brute_force_has_clique_cut(d)) CHECK(verify_clique_cut(d, c->cut));
    }
}

TEST_CASE("oracle caps") {
    CHECK_THROWS_AS(brute_force_is_perfect(cycle_graph(13)), OracleCapExceeded);
    CHECK_THROWS_AS(brute_force_has_clique_cut(directed_cycle(6), 5), OracleCapExceeded);
    CHECK_NOTHROW(brute_force_is_perfect(cycle_graph(13), 13));
    try {
        brute_force_is_perfect(cycle_graph(13));
    } catch (const OracleCapExceeded& e) {
        CHECK(std::string(e.what()).rfind("not computed", 0) == 0);
    }

    ::setenv("ARCLOCAL_ORACLE_CAP", "16", 1);
    CHECK(oracle_cap_from_env() == 16);
    ::setenv("ARCLOCAL_ORACLE_CAP", "junk", 1);
    CHECK(oracle_cap_from_env(9) == 9);
    ::setenv("ARCLOCAL_ORACLE_CAP", "99", 1);
    CHECK(oracle_cap_from_env() == kDefaultOracleCap);
    ::unsetenv("ARCLOCAL_ORACLE_CAP");
    CHECK(oracle_cap_from_env() == kDefaultOracleCap);
}
