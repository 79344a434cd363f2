#include <doctest.h>

#include "arcloc/decomposition.hpp"
#include "arcloc/errors.hpp"
#include "arcloc/generators.hpp"
#include "brute.hpp"

using namespace arcloc;

namespace {

Digraph u_onto_c5(bool pendant = false) {
    std::vector<Arc> arcs = directed_cycle(5).arcs();
    for (Vertex v = 0; v < 5; ++v) arcs.push_back({5, v});
    if (pendant) arcs.push_back({5, 6});
    return Digraph(pendant ? 7 : 6, arcs);
}

ExtendedCycleCertificate singleton_cycle(int k) {
    ExtendedCycleCertificate c;
    for (Vertex v = 0; v < k; ++v) c.parts.push_back(VertexSet{v});
    return c;
}

}  // namespace

TEST_CASE("diperfection inside the class") {
    CHECK(is_diperfect_in_class(directed_path(6)).diperfect);

    const auto fig = make_extended_cycle({2, 1, 3, 2, 1});
    const auto v = is_diperfect_in_class(fig.digraph);
    CHECK_FALSE(v.diperfect);
    REQUIRE(v.odd_cycle);
    CHECK(v.odd_cycle->size() == 5);
    CHECK(is_directed_cycle(fig.digraph, *v.odd_cycle));
    for (std::size_t i = 0; i < 5; ++i) CHECK(fig.certificate.parts[i].contains((*v.odd_cycle)[i]));

    CHECK_THROWS_AS(is_diperfect_in_class(Digraph(4, {{0, 1}, {1, 2}, {3, 2}})), ClassViolation);
}

TEST_CASE("semicomplete digraphs are diperfect, n <= 5") {
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t i = 0; i < digraph_count(n); ++i) {
            const Digraph d = digraph_from_index(n, i);
            if (is_semicomplete(d)) REQUIRE(is_diperfect_in_class(d).diperfect);
        }
}

TEST_CASE("trichotomy on the worked examples") {
    const auto fig = make_extended_cycle({2, 1, 3, 2, 1});
    const Decomposition a = decompose_in_semicomplete(fig.digraph);
    const auto* tri = std::get_if<TriPartition>(&a.outcome);
    REQUIRE(tri);
    CHECK(tri->v1.empty());
    CHECK(tri->v2 == fig.digraph.vertices());
    CHECK(tri->v3.empty());
    CHECK(tri->cycle == fig.certificate);
    CHECK(verify_decomposition(fig.digraph, a));

    const Decomposition b = decompose_in_semicomplete(u_onto_c5());
    const auto* tb = std::get_if<TriPartition>(&b.outcome);
    REQUIRE(tb);
    CHECK(tb->v1 == VertexSet{5});
    CHECK(tb->v2 == VertexSet{0, 1, 2, 3, 4});
    CHECK(tb->v3.empty());
    CHECK(verify_decomposition(u_onto_c5(), b));

    const Decomposition c = decompose_in_semicomplete(u_onto_c5(true));
    const auto* cut = std::get_if<CliqueCut>(&c.outcome);
    REQUIRE(cut);
    CHECK(cut->certificate.cut == VertexSet{5});
    CHECK(verify_decomposition(u_onto_c5(true), c));

    CHECK(std::holds_alternative<Diperfect>(decompose_in_semicomplete(directed_path(4)).outcome));
}

TEST_CASE("initial odd component with a bipartite remainder") {
    // C5 dominating a pendant vertex
    std::vector<Arc> arcs = directed_cycle(5).arcs();
    arcs.push_back({0, 5});
    const Digraph d(6, arcs);
    REQUIRE(is_arc_locally_in_semicomplete(d));
    const Decomposition out = decompose_in_semicomplete(d);
    const auto* tri = std::get_if<TriPartition>(&out.outcome);
    REQUIRE(tri);
    CHECK(tri->v1.empty());
    CHECK(tri->v3 == VertexSet{5});
    CHECK(verify_decomposition(d, out));
}

TEST_CASE("out-semicomplete dual") {
    const Digraph d = inverse(u_onto_c5());
    const Decomposition a = decompose_out_semicomplete(d);
    CHECK(a.direction == Direction::out);
    const auto* tri = std::get_if<TriPartition>(&a.outcome);
    REQUIRE(tri);
    CHECK(tri->v1 == VertexSet{5});
    CHECK(set_relation(d, tri->v2, tri->v1).strictly_dominates);
    CHECK(certifies_extended_cycle(d, tri->cycle));
    CHECK(verify_decomposition(d, a));

    CHECK(std::holds_alternative<Diperfect>(decompose_out_semicomplete(directed_path(5)).outcome));

    const Digraph e = inverse(u_onto_c5(true));
    const Decomposition b = decompose_out_semicomplete(e);
    const auto* cut = std::get_if<CliqueCut>(&b.outcome);
    REQUIRE(cut);
    CHECK(cut->certificate.cut == VertexSet{5});
    CHECK(verify_decomposition(e, b));
}

TEST_CASE("preconditions are enforced") {
    const Digraph h1(4, {{0, 1}, {1, 2}, {3, 2}});
    try {
        decompose_in_semicomplete(h1);
        FAIL("expected a class violation");
    } catch (const ClassViolation& e) {
        CHECK(e.witness() == PatternWitness{Pattern::h1, {0, 1, 2, 3}});
    }
    CHECK_THROWS_AS(decompose_in_semicomplete(Digraph(3, {{0, 1}})), DisconnectedInput);
    CHECK_THROWS_AS(decompose_out_semicomplete(u_onto_c5()), ClassViolation);
    CHECK_THROWS_AS(classify_arc_locally_semicomplete(u_onto_c5()), ClassViolation);
    CHECK_THROWS_AS(classify_arc_locally_semicomplete(Digraph(2, {})), DisconnectedInput);
}

TEST_CASE("arc-locally semicomplete dichotomy") {
    const ALSOutcome c5 = classify_arc_locally_semicomplete(directed_cycle(5));
    const auto* odd = std::get_if<OddExtendedCycle>(&c5);
    REQUIRE(odd);
    CHECK(odd->cycle == singleton_cycle(5));

    CHECK(std::holds_alternative<Diperfect>(classify_arc_locally_semicomplete(Digraph(3, {{0, 1}, {1, 2}, {0, 2}}))));

    const auto fig = make_extended_cycle({2, 1, 3, 2, 1});
    const ALSOutcome f = classify_arc_locally_semicomplete(fig.digraph);
    REQUIRE(std::holds_alternative<OddExtendedCycle>(f));
    CHECK(std::get<OddExtendedCycle>(f).cycle.part_sizes() == std::vector<int>{2, 1, 3, 2, 1});
    CHECK(verify_als_outcome(fig.digraph, f));
}

TEST_CASE("the verifier rejects wrong claims") {
    const Digraph d = u_onto_c5();
    const VertexSet c5{0, 1, 2, 3, 4};

    const auto swapped = verify_decomposition(d, {Direction::in, TriPartition{{}, c5, {5}, singleton_cycle(5)}});
    CHECK_FALSE(swapped.ok);
    CHECK(swapped.reason == "V2 ⇒ V3 violated");

    CHECK(verify_decomposition(directed_path(3), {Direction::in, Diperfect{}}));
    CHECK_FALSE(verify_decomposition(d, {Direction::in, Diperfect{}}));
    CHECK_FALSE(verify_decomposition(d, {Direction::in, CliqueCut{{VertexSet{5}}}}));
    CHECK(verify_decomposition(d, {Direction::in, TriPartition{{}, c5, {}, singleton_cycle(5)}}).reason ==
          "parts do not cover V(D)");
    CHECK(verify_decomposition(d, {Direction::in, TriPartition{{5}, c5, {5}, singleton_cycle(5)}}).reason ==
          "parts are not pairwise disjoint");
    CHECK(verify_decomposition(d, {Direction::out, TriPartition{{5}, c5, {}, singleton_cycle(5)}}).reason ==
          "V2 ↦ V1 violated");

    ExtendedCycleCertificate wrong = singleton_cycle(5);
    std::swap(wrong.parts[1], wrong.parts[2]);
    CHECK_FALSE(verify_decomposition(d, {Direction::in, TriPartition{{5}, c5, {}, wrong}}));
    CHECK_FALSE(verify_decomposition(d, {Direction::in, TriPartition{{7}, c5, {}, singleton_cycle(5)}}));

    CHECK_FALSE(verify_als_outcome(directed_cycle(5), Diperfect{}));
    CHECK_FALSE(verify_als_outcome(u_onto_c5(), OddExtendedCycle{singleton_cycle(5)}));
}

TEST_CASE("random members decompose and verify") {
    Rng rng(4242);
    for (int t = 0; t < 600; ++t) {
        const ClassKind kind = t % 2 ? ClassKind::in_semicomplete : ClassKind::out_semicomplete;
        const Digraph d = random_connected_member(rng.between(6, 10), kind, rng);
        const Decomposition out = kind == ClassKind::in_semicomplete ? decompose_in_semicomplete(d)
                                                                     : decompose_out_semicomplete(d);
        const auto v = verify_decomposition(d, out);
        REQUIRE_MESSAGE(v.ok, v.reason);
        if (std::holds_alternative<Diperfect>(out.outcome) && d.order() <= 9)
            REQUIRE(brute::perfect_by_definition(brute::underlying(d)));
    }
}

TEST_CASE("diperfect test matches the definition of perfection") {
    Rng rng(77);
    for (int t = 0; t < 400; ++t) {
        const Digraph d = random_connected_member(rng.between(5, 9), ClassKind::in_semicomplete, rng);
        REQUIRE(is_diperfect_in_class(d).diperfect == brute::perfect_by_definition(brute::underlying(d)));
    }
}

TEST_CASE("outcome names") {
    CHECK(outcome_name(Decomposition{Direction::in, Diperfect{}}) == "diperfect");
    CHECK(outcome_name(Decomposition{Direction::in, CliqueCut{}}) == "clique_cut");
    CHECK(outcome_name(ALSOutcome{OddExtendedCycle{}}) == "odd_extended_cycle");
}
