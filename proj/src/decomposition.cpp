#include "arcloc/decomposition.hpp"

#include <algorithm>

#include "arcloc/classes.hpp"
#include "arcloc/errors.hpp"

namespace arcloc {

namespace {

void require_in_semicomplete(const Digraph& d) {
    if (auto w = find_pattern_violation(d, Pattern::h1)) throw ClassViolation("arc-locally in-semicomplete", *w);
}

void require_connected(const Digraph& d) {
    if (!is_connected(d)) throw DisconnectedInput();
}

ExtendedCycleCertificate lift(const InducedSubdigraph& sub, const ExtendedCycleCertificate& local) {
    ExtendedCycleCertificate out;
    for (const auto& part : local.parts) out.parts.push_back(sub.lift(part));
    return canonical(std::move(out));
}

// The same parts listed against the reversed arcs.
ExtendedCycleCertificate reversed(ExtendedCycleCertificate cert) {
    std::reverse(cert.parts.begin(), cert.parts.end());
    return canonical(std::move(cert));
}

}  // namespace

std::optional<OddCycleComponent> find_odd_extended_cycle_component(const Digraph& d, const StrongDecomposition& sd) {
    std::vector<bool> tried(sd.size(), false);
    for (Vertex v = 0; v < d.order(); ++v) {
        const int c = sd.component_of(v);
        if (tried[static_cast<std::size_t>(c)]) continue;
        tried[static_cast<std::size_t>(c)] = true;
        if (sd.component(c).size() < 5) continue;
        const auto sub = induced(d, sd.component(c));
        if (auto cert = is_odd_extended_cycle_ge5(sub.digraph)) return OddCycleComponent{c, lift(sub, *cert)};
    }
    return std::nullopt;
}

DiperfectVerdict is_diperfect_in_class(const Digraph& d) {
    require_in_semicomplete(d);
    const StrongDecomposition sd(d);
    if (auto q = find_odd_extended_cycle_component(d, sd)) return {false, q->cycle.transversal()};
    return {};
}

Decomposition decompose_in_semicomplete(const Digraph& d) {
    require_connected(d);
    require_in_semicomplete(d);
    const StrongDecomposition sd(d);
    const auto q = find_odd_extended_cycle_component(d, sd);
    if (!q) return {Direction::in, Diperfect{}};

    const VertexSet& cycle_vertices = sd.component(q->component);
    const auto initial = sd.initial_components();
    if (std::find(initial.begin(), initial.end(), q->component) != initial.end())
        return {Direction::in, TriPartition{{}, cycle_vertices, set_difference(d.vertices(), cycle_vertices), q->cycle}};

    const auto reach = sd.reach_sets(q->component);
    VertexSet v1 = sd.vertices_of(reach.reaching);
    VertexSet v3 = sd.vertices_of(reach.reached);
    if (v1.size() + cycle_vertices.size() + v3.size() == static_cast<std::size_t>(d.order()))
        return {Direction::in, TriPartition{std::move(v1), cycle_vertices, std::move(v3), q->cycle}};
    return {Direction::in, CliqueCut{CliqueCutCertificate{std::move(v1)}}};
}

Decomposition decompose_out_semicomplete(const Digraph& d) {
    require_connected(d);
    if (auto w = find_pattern_violation(d, Pattern::h2)) throw ClassViolation("arc-locally out-semicomplete", *w);
    Decomposition mirrored = decompose_in_semicomplete(inverse(d));
    mirrored.direction = Direction::out;
    if (auto* tri = std::get_if<TriPartition>(&mirrored.outcome)) tri->cycle = reversed(std::move(tri->cycle));
    return mirrored;
}

ALSOutcome classify_arc_locally_semicomplete(const Digraph& d) {
    require_connected(d);
    if (auto m = is_arc_locally_semicomplete(d); !m)
        throw ClassViolation("arc-locally semicomplete", *m.witness);
    const StrongDecomposition sd(d);
    const auto q = find_odd_extended_cycle_component(d, sd);
    if (!q) return Diperfect{};
    if (sd.component(q->component).size() != static_cast<std::size_t>(d.order()))
        throw TheoremViolation("odd extended cycle component of a connected arc-locally semicomplete digraph "
                               "does not span the digraph");
    return OddExtendedCycle{q->cycle};
}

// ---------------------------------------------------------------------------

namespace {

Verification fail(std::string reason) { return {false, std::move(reason)}; }

Verification verify_diperfect(const Digraph& d, int oracle_cap) {
    if (auto c = find_induced_odd_directed_cycle_ge5(d)) return fail("induced odd directed cycle of length >= 5 present");
    bool hole = false;
    for_each_hole(d, 5, true, [&](const std::vector<Vertex>&) {
        hole = true;
        return false;
    });
    if (hole) return fail("U(D) has an odd hole");
    if (d.order() <= oracle_cap) {
        const auto verdict = brute_force_is_perfect(underlying_graph(d), oracle_cap);
        if (!verdict.perfect) return fail("U(D) is not perfect");
    }
    return {};
}

Verification verify_odd_cycle_certificate(const Digraph& d, const ExtendedCycleCertificate& cert, const VertexSet& over,
                                          std::string_view label) {
    if (cert.length() < 5 || cert.length() % 2 == 0)
        return fail(std::string(label) + " is not an odd extended cycle of length >= 5");
    if (cert.vertices() != over) return fail(std::string(label) + " certificate does not cover " + std::string(label));
    if (!certifies_extended_cycle(d, cert)) return fail(std::string(label) + " certificate does not validate");
    return {};
}

bool in_range(const Digraph& d, const VertexSet& s) {
    return s.empty() || (s.front() >= 0 && s.members().back() < d.order());
}

Verification verify_tripartition(const Digraph& d, const TriPartition& t, Direction dir) {
    for (const VertexSet* s : {&t.v1, &t.v2, &t.v3})
        if (!in_range(d, *s)) return fail("partition refers to vertices outside D");
    if (!disjoint(t.v1, t.v2) || !disjoint(t.v1, t.v3) || !disjoint(t.v2, t.v3))
        return fail("parts are not pairwise disjoint");
    if (set_union(set_union(t.v1, t.v2), t.v3) != d.vertices()) return fail("parts do not cover V(D)");
    if (!is_semicomplete(induced(d, t.v1).digraph)) return fail("D[V1] is not semicomplete");
    if (auto r = verify_odd_cycle_certificate(d, t.cycle, t.v2, "V2"); !r) return r;
    if (!is_bipartite(induced(d, t.v3).digraph)) return fail("D[V3] is not bipartite");

    if (dir == Direction::in) {
        if (!set_relation(d, t.v1, t.v2).strictly_dominates) return fail("V1 ↦ V2 violated");
        if (!set_relation(d, t.v1, t.v3).no_back_arc) return fail("V1 ⇒ V3 violated");
        if (!set_relation(d, t.v2, t.v3).no_back_arc) return fail("V2 ⇒ V3 violated");
    } else {
        if (!set_relation(d, t.v2, t.v1).strictly_dominates) return fail("V2 ↦ V1 violated");
        if (!set_relation(d, t.v3, t.v1).no_back_arc) return fail("V3 ⇒ V1 violated");
        if (!set_relation(d, t.v3, t.v2).no_back_arc) return fail("V3 ⇒ V2 violated");
    }
    return {};
}

}  // namespace

Verification verify_decomposition(const Digraph& d, const Decomposition& outcome, int oracle_cap) {
    if (const auto* tri = std::get_if<TriPartition>(&outcome.outcome)) return verify_tripartition(d, *tri, outcome.direction);
    if (const auto* cut = std::get_if<CliqueCut>(&outcome.outcome)) {
        if (!in_range(d, cut->certificate.cut)) return fail("cut refers to vertices outside D");
        if (!verify_clique_cut(d, cut->certificate.cut)) return fail("not a clique cut");
        return {};
    }
    return verify_diperfect(d, oracle_cap);
}

Verification verify_als_outcome(const Digraph& d, const ALSOutcome& outcome, int oracle_cap) {
    if (const auto* odd = std::get_if<OddExtendedCycle>(&outcome))
        return verify_odd_cycle_certificate(d, odd->cycle, d.vertices(), "V(D)");
    return verify_diperfect(d, oracle_cap);
}

std::string_view outcome_name(const Decomposition& d) {
    switch (d.outcome.index()) {
        case 0: return "diperfect";
        case 1: return "tripartition";
        default: return "clique_cut";
    }
}

std::string_view outcome_name(const ALSOutcome& d) {
    return std::holds_alternative<Diperfect>(d) ? "diperfect" : "odd_extended_cycle";
}

}  // namespace arcloc
