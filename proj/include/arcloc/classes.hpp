#pragma once

// Recognition of the classes defined by forbidding the four orientations of
// P4 (H1..H4) with non-adjacent endpoints, plus 3-anti-circulant digraphs.
//
//   H1: v1->v2, v2->v3, v4->v3      arc-locally in-semicomplete
//   H2: v2->v1, v2->v3, v3->v4      arc-locally out-semicomplete
//   H3: v1->v2, v2->v3, v3->v4      3-quasi-transitive
//   H4: v2->v1, v2->v3, v4->v3      3-anti-quasi-transitive
//
// An occurrence is any four distinct vertices carrying the three arcs; other
// arcs among them do not matter except that v1 and v4 must be adjacent.

#include <array>
#include <optional>
#include <string_view>

#include "arcloc/digraph.hpp"

namespace arcloc {

enum class Pattern { h1, h2, h3, h4, anti_circulant };

std::string_view pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(std::string_view name);

struct PatternWitness {
    Pattern pattern;
    std::array<Vertex, 4> vertices;

    bool operator==(const PatternWitness&) const = default;
};

// Replays a witness against `d`: the pattern's arcs are present on four
// distinct vertices and the closing condition fails.
bool witness_holds(const Digraph& d, const PatternWitness& w);

// Lexicographically least (v1,v2,v3,v4) occurrence of `p` whose endpoints are
// non-adjacent, or nullopt when D is orientedly {p}-free. `p` must be one of
// H1..H4.
std::optional<PatternWitness> find_pattern_violation(const Digraph& d, Pattern p);

struct Membership {
    bool member = true;
    std::optional<PatternWitness> witness;

    explicit operator bool() const { return member; }
};

Membership is_arc_locally_in_semicomplete(const Digraph& d);
Membership is_arc_locally_out_semicomplete(const Digraph& d);
// Both of the above; the witness is the H1 one when both fail.
Membership is_arc_locally_semicomplete(const Digraph& d);
Membership is_3_quasi_transitive(const Digraph& d);
Membership is_3_anti_quasi_transitive(const Digraph& d);

// For all distinct x1..x4 with x1->x2, x3->x2, x3->x4 the arc x4->x1 exists.
// The witness is the lexicographically least tuple missing x4->x1.
Membership is_3_anti_circulant(const Digraph& d);

struct ClassReport {
    Membership arc_locally_in_semicomplete;
    Membership arc_locally_out_semicomplete;
    Membership arc_locally_semicomplete;
    Membership three_quasi_transitive;
    Membership three_anti_quasi_transitive;
    Membership three_anti_circulant;
    // No witness type exists for the remaining three.
    bool semicomplete = true;
    bool semicomplete_bipartite = true;
    bool bipartite = true;
};

ClassReport classify(const Digraph& d);

}  // namespace arcloc
