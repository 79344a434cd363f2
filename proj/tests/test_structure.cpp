#include <doctest.h>

#include <algorithm>

#include "arcloc/generators.hpp"
#include "arcloc/structure.hpp"
#include "brute.hpp"

using namespace arcloc;

namespace {

// u = 5 dominates every vertex of the directed 5-cycle 0..4.
Digraph u_onto_c5(bool pendant = false) {
    std::vector<Arc> arcs = directed_cycle(5).arcs();
    for (Vertex v = 0; v < 5; ++v) arcs.push_back({5, v});
    if (pendant) arcs.push_back({5, 6});
    return Digraph(pendant ? 7 : 6, arcs);
}

void check_components(const Digraph& d) {
    const StrongDecomposition sd(d);
    const auto reach = brute::closure(d);
    std::vector<bool> seen(static_cast<std::size_t>(d.order()));
    for (const auto& comp : sd.components())
        for (Vertex v : comp) {
            REQUIRE_FALSE(seen[v]);
            seen[v] = true;
        }
    REQUIRE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = 0; v < d.order(); ++v)
            REQUIRE((sd.component_of(u) == sd.component_of(v)) == (reach[u][v] && reach[v][u]));
    for (const Arc& a : sd.condensation().arcs()) REQUIRE(a.from < a.to);
    for (const Arc& a : d.arcs()) {
        const int cu = sd.component_of(a.from), cv = sd.component_of(a.to);
        if (cu != cv) REQUIRE(sd.condensation().has_arc(cu, cv));
    }
}

}  // namespace

TEST_CASE("strong components of the examples") {
    const StrongDecomposition c5(directed_cycle(5));
    CHECK(c5.size() == 1);
    CHECK(c5.component(0).size() == 5);
    CHECK(c5.is_strong());
    CHECK(c5.initial_components() == std::vector<int>{0});
    CHECK(c5.reach_sets(0).reaching.empty());
    CHECK(c5.reach_sets(0).reached.empty());

    const StrongDecomposition path(directed_path(3));
    CHECK(path.size() == 3);
    CHECK(path.condensation().arc_count() == 2);
    CHECK(path.initial_components() == std::vector<int>{path.component_of(0)});
    auto reaching = path.reach_sets(path.component_of(2)).reaching;
    std::sort(reaching.begin(), reaching.end());
    std::vector<int> expect{path.component_of(0), path.component_of(1)};
    std::sort(expect.begin(), expect.end());
    CHECK(reaching == expect);

    const StrongDecomposition uc(u_onto_c5());
    CHECK(uc.size() == 2);
    const int cu = uc.component_of(5), cq = uc.component_of(0);
    CHECK(uc.condensation().has_arc(cu, cq));
    CHECK(uc.condensation().arc_count() == 1);
    CHECK(uc.reach_sets(cq).reaching == std::vector<int>{cu});
    CHECK(uc.reach_sets(cq).reached.empty());
    CHECK_THROWS_AS(uc.reach_sets(2), std::out_of_range);
}

TEST_CASE("strong components match mutual reachability") {
    for (int n = 0; n <= 4; ++n)
        for (std::uint64_t i = 0; i < digraph_count(n); ++i) check_components(digraph_from_index(n, i));
    Rng rng(17);
    for (int t = 0; t < 2000; ++t) check_components(random_digraph(rng.between(1, 10), 0.25, 0.05, rng));
}

TEST_CASE("extended cycle recognition") {
    const auto fig = make_extended_cycle({2, 1, 3, 2, 1});
    const auto cert = recognize_extended_cycle(fig.digraph);
    REQUIRE(cert);
    CHECK(cert->part_sizes() == std::vector<int>{2, 1, 3, 2, 1});
    CHECK(*cert == fig.certificate);
    CHECK(is_odd_extended_cycle_ge5(fig.digraph));

    for (int k = 3; k <= 8; ++k) {
        const auto c = recognize_extended_cycle(directed_cycle(k));
        REQUIRE(c);
        CHECK(c->length() == k);
        CHECK(c->part_sizes() == std::vector<int>(static_cast<std::size_t>(k), 1));
    }
    CHECK_FALSE(recognize_extended_cycle(Digraph(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK_FALSE(is_odd_extended_cycle_ge5(directed_cycle(6)));
    CHECK_FALSE(is_odd_extended_cycle_ge5(directed_cycle(3)));
    CHECK(is_odd_extended_cycle_ge5(directed_cycle(5))->length() == 5);
    // k = 2 is never an extended cycle
    CHECK_FALSE(recognize_extended_cycle(Digraph(2, {{0, 1}, {1, 0}})));
}

TEST_CASE("certificates rebuild the digraph") {
    Rng rng(8);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> sizes(static_cast<std::size_t>(rng.between(3, 9)));
        for (int& s : sizes) s = rng.between(1, 4);
        // relabel randomly
        const auto ec = make_extended_cycle(sizes);
        const int n = ec.digraph.order();
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.between(0, i)]);
        std::vector<Arc> arcs;
        for (const Arc& a : ec.digraph.arcs()) arcs.push_back({perm[a.from], perm[a.to]});
        const Digraph d(n, arcs);

        const auto cert = recognize_extended_cycle(d);
        REQUIRE(cert);
        CHECK(certifies_extended_cycle(d, *cert));
        CHECK(cert->length() == static_cast<int>(sizes.size()));
        CHECK(std::find(cert->parts[0].begin(), cert->parts[0].end(), 0) != cert->parts[0].end());
        std::vector<Arc> rebuilt;
        for (int i = 0; i < cert->length(); ++i)
            for (Vertex u : cert->parts[i])
                for (Vertex v : cert->parts[(i + 1) % cert->length()]) rebuilt.push_back({u, v});
        CHECK(Digraph(n, rebuilt) == d);
    }
}

TEST_CASE("extended cycle recogniser agrees with partition search, n <= 4") {
    for (int n = 0; n <= 4; ++n)
        for (std::uint64_t i = 0; i < digraph_count(n); ++i) {
            const Digraph d = digraph_from_index(n, i);
            const auto cert = recognize_extended_cycle(d);
            REQUIRE(cert.has_value() == brute::extended_cycle_parts(d).has_value());
            if (cert) REQUIRE(certifies_extended_cycle(d, *cert));
        }
}

TEST_CASE("clique cuts") {
    CHECK(verify_clique_cut(directed_path(3), VertexSet{1}));
    CHECK_FALSE(verify_clique_cut(directed_cycle(5), VertexSet{}));
    CHECK(verify_clique_cut(u_onto_c5(true), VertexSet{5}));
    CHECK_FALSE(verify_clique_cut(u_onto_c5(true), VertexSet{0, 2}));  // not a clique
    CHECK_FALSE(verify_clique_cut(directed_path(2), VertexSet{0, 1}));  // nothing left
    CHECK(verify_clique_cut(Digraph(2, {}), VertexSet{}));
    CHECK_THROWS_AS(verify_clique_cut(directed_path(3), VertexSet{3}), std::invalid_argument);
}

TEST_CASE("induced odd directed cycles") {
    const auto c5 = find_induced_odd_directed_cycle_ge5(directed_cycle(5));
    REQUIRE(c5);
    CHECK(*c5 == std::vector<Vertex>{0, 1, 2, 3, 4});

    auto chord = directed_cycle(5).arcs();
    chord.push_back({0, 2});
    CHECK_FALSE(find_induced_odd_directed_cycle_ge5(Digraph(5, chord)));
    CHECK_FALSE(find_induced_odd_directed_cycle_ge5(directed_path(7)));
    CHECK(is_directed_cycle(directed_cycle(5), {0, 1, 2, 3, 4}));
    CHECK(is_directed_cycle(directed_cycle(5), {0, 4, 3, 2, 1}));
    CHECK_FALSE(is_directed_cycle(Digraph(5, chord), {0, 1, 2, 3, 4}));
}

TEST_CASE("induced non-oriented odd cycles") {
    CHECK_FALSE(find_induced_nonoriented_odd_cycle_ge5(directed_cycle(5)));
    const Digraph bent(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const auto s = find_induced_nonoriented_odd_cycle_ge5(bent);
    REQUIRE(s);
    CHECK(s->size() == 5);
    std::vector<Arc> all;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = 0; v < 5; ++v)
            if (u != v) all.push_back({u, v});
    CHECK_FALSE(find_induced_nonoriented_odd_cycle_ge5(Digraph(5, all)));
}

TEST_CASE("cycle searches agree with subset enumeration") {
    Rng rng(31);
    for (int t = 0; t < 3000; ++t) {
        const Digraph d = random_digraph(rng.between(5, 9), 0.35, 0.05 * rng.uniform(), rng);
        const auto odd = find_induced_odd_directed_cycle_ge5(d);
        REQUIRE(odd.has_value() == brute::has_induced_odd_directed_cycle_ge5(d));
        if (odd) REQUIRE((odd->size() >= 5 && odd->size() % 2 == 1 && is_directed_cycle(d, *odd)));
        const auto non = find_induced_nonoriented_odd_cycle_ge5(d);
        REQUIRE(non.has_value() == brute::has_induced_nonoriented_odd_cycle_ge5(d));
        if (non) REQUIRE_FALSE(is_directed_cycle(d, *non));
    }
}

TEST_CASE("hole enumeration reports each hole once") {
    // C7 has one hole, K4 none, C5 plus a chord none of length >= 5
    int holes = 0;
    for_each_hole(directed_cycle(7), 5, true, [&](const std::vector<Vertex>& c) {
        CHECK(c.size() == 7);
        ++holes;
        return true;
    });
    CHECK(holes == 1);
    holes = 0;
    for_each_hole(directed_cycle(6), 5, true, [&](const std::vector<Vertex>&) { return ++holes, true; });
    CHECK(holes == 0);
    for_each_hole(directed_cycle(6), 4, false, [&](const std::vector<Vertex>&) { return ++holes, true; });
    CHECK(holes == 1);
}
