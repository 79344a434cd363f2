#include "arcloc/classes.hpp"

#include <stdexcept>

namespace arcloc {

namespace {

enum class Side { in, out };

struct Shape {
    Side first;   // where v2 sits relative to v1: out => v1->v2, in => v2->v1
    Side fourth;  // where v4 sits relative to v3: out => v3->v4, in => v4->v3
};

Shape shape_of(Pattern p) {
    switch (p) {
        case Pattern::h1: return {Side::out, Side::in};
        case Pattern::h2: return {Side::in, Side::out};
        case Pattern::h3: return {Side::out, Side::out};
        case Pattern::h4: return {Side::in, Side::in};
        case Pattern::anti_circulant: break;
    }
    throw std::invalid_argument("pattern has no P4 shape");
}

std::span<const Vertex> side(const Digraph& d, Vertex v, Side s) {
    return s == Side::out ? d.out_neighbors(v) : d.in_neighbors(v);
}

}  // namespace

std::string_view pattern_name(Pattern p) {
    switch (p) {
        case Pattern::h1: return "H1";
        case Pattern::h2: return "H2";
        case Pattern::h3: return "H3";
        case Pattern::h4: return "H4";
        case Pattern::anti_circulant: return "AntiCirculant";
    }
    return "?";
}

std::optional<Pattern> pattern_from_name(std::string_view name) {
    for (Pattern p : {Pattern::h1, Pattern::h2, Pattern::h3, Pattern::h4, Pattern::anti_circulant})
        if (pattern_name(p) == name) return p;
    return std::nullopt;
}

bool witness_holds(const Digraph& d, const PatternWitness& w) {
    const auto [a, b, c, e] = w.vertices;
    const int n = d.order();
    for (Vertex v : w.vertices)
        if (v < 0 || v >= n) return false;
    if (a == b || a == c || a == e || b == c || b == e || c == e) return false;
    switch (w.pattern) {
        case Pattern::h1: return d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(e, c) && !d.linked(a, e);
        case Pattern::h2: return d.has_arc(b, a) && d.has_arc(b, c) && d.has_arc(c, e) && !d.linked(a, e);
        case Pattern::h3: return d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, e) && !d.linked(a, e);
        case Pattern::h4: return d.has_arc(b, a) && d.has_arc(b, c) && d.has_arc(e, c) && !d.linked(a, e);
        case Pattern::anti_circulant:
            return d.has_arc(a, b) && d.has_arc(c, b) && d.has_arc(c, e) && !d.has_arc(e, a);
    }
    return false;
}

std::optional<PatternWitness> find_pattern_violation(const Digraph& d, Pattern p) {
    const Shape shape = shape_of(p);
    // Visiting v1, v2, v3, v4 in ascending order makes the first hit the
    // lexicographically least occurrence.
    for (Vertex v1 = 0; v1 < d.order(); ++v1)
        for (Vertex v2 : side(d, v1, shape.first))
            for (Vertex v3 : d.out_neighbors(v2)) {
                if (v3 == v1) continue;
                for (Vertex v4 : side(d, v3, shape.fourth)) {
                    if (v4 == v1 || v4 == v2) continue;
                    if (!d.linked(v1, v4)) return PatternWitness{p, {v1, v2, v3, v4}};
                }
            }
    return std::nullopt;
}

namespace {

Membership from_violation(std::optional<PatternWitness> w) {
    return Membership{!w.has_value(), w};
}

}  // namespace

Membership is_arc_locally_in_semicomplete(const Digraph& d) {
    return from_violation(find_pattern_violation(d, Pattern::h1));
}

Membership is_arc_locally_out_semicomplete(const Digraph& d) {
    return from_violation(find_pattern_violation(d, Pattern::h2));
}

Membership is_arc_locally_semicomplete(const Digraph& d) {
    if (auto w = find_pattern_violation(d, Pattern::h1)) return {false, w};
    return from_violation(find_pattern_violation(d, Pattern::h2));
}

Membership is_3_quasi_transitive(const Digraph& d) {
    return from_violation(find_pattern_violation(d, Pattern::h3));
}

Membership is_3_anti_quasi_transitive(const Digraph& d) {
    return from_violation(find_pattern_violation(d, Pattern::h4));
}

Membership is_3_anti_circulant(const Digraph& d) {
    for (Vertex x1 = 0; x1 < d.order(); ++x1)
        for (Vertex x2 : d.out_neighbors(x1))
            for (Vertex x3 : d.in_neighbors(x2)) {
                if (x3 == x1) continue;
                for (Vertex x4 : d.out_neighbors(x3)) {
                    if (x4 == x1 || x4 == x2) continue;
                    if (!d.has_arc(x4, x1)) return {false, PatternWitness{Pattern::anti_circulant, {x1, x2, x3, x4}}};
                }
            }
    return {};
}

ClassReport classify(const Digraph& d) {
    ClassReport r;
    r.arc_locally_in_semicomplete = is_arc_locally_in_semicomplete(d);
    r.arc_locally_out_semicomplete = is_arc_locally_out_semicomplete(d);
    r.arc_locally_semicomplete = r.arc_locally_in_semicomplete.member ? r.arc_locally_out_semicomplete
                                                                       : r.arc_locally_in_semicomplete;
    r.three_quasi_transitive = is_3_quasi_transitive(d);
    r.three_anti_quasi_transitive = is_3_anti_quasi_transitive(d);
    r.three_anti_circulant = is_3_anti_circulant(d);
    r.semicomplete = is_semicomplete(d);
    r.semicomplete_bipartite = is_semicomplete_bipartite(d);
    r.bipartite = is_bipartite(d);
    return r;
}

}  // namespace arcloc
