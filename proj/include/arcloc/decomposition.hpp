#pragma once

// Structure decompositions of connected arc-locally in-/out-semicomplete and
// arc-locally semicomplete digraphs, and an independent verifier for them.
//
// A connected arc-locally in-semicomplete digraph D is
//   - diperfect, or
//   - partitioned into (V1, V2, V3) with D[V1] semicomplete, V1 |-> V2,
//     V1 => V3, D[V2] an odd extended cycle of length >= 5, V2 => V3 and
//     D[V3] bipartite (V1, V3 possibly empty), or
//   - split by a clique cut.
// The out-semicomplete case is the same statement on the inverse digraph.
// A connected arc-locally semicomplete digraph is diperfect or is itself an
// odd extended cycle of length >= 5.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arcloc/digraph.hpp"
#include "arcloc/oracles.hpp"
#include "arcloc/structure.hpp"

namespace arcloc {

enum class Direction { in, out };

struct Diperfect {
    bool operator==(const Diperfect&) const = default;
};

struct TriPartition {
    VertexSet v1;
    VertexSet v2;
    VertexSet v3;
    ExtendedCycleCertificate cycle;  // over V2, original labels

    bool operator==(const TriPartition&) const = default;
};

struct CliqueCut {
    CliqueCutCertificate certificate;

    bool operator==(const CliqueCut&) const = default;
};

struct Decomposition {
    Direction direction = Direction::in;
    std::variant<Diperfect, TriPartition, CliqueCut> outcome;
};

struct OddExtendedCycle {
    ExtendedCycleCertificate cycle;

    bool operator==(const OddExtendedCycle&) const = default;
};

using ALSOutcome = std::variant<Diperfect, OddExtendedCycle>;

struct DiperfectVerdict {
    bool diperfect = true;
    // An induced odd directed cycle of length >= 5 when not diperfect.
    std::optional<std::vector<Vertex>> odd_cycle;
};

// Diperfection test for arc-locally in-semicomplete digraphs: D is diperfect
// iff no strong component is an odd extended cycle of length >= 5.
// Throws ClassViolation outside the class.
DiperfectVerdict is_diperfect_in_class(const Digraph& d);

// Strong component chosen as the odd extended cycle (length >= 5) holding the
// smallest vertex label, if any.
struct OddCycleComponent {
    int component;
    ExtendedCycleCertificate cycle;  // original labels
};
std::optional<OddCycleComponent> find_odd_extended_cycle_component(const Digraph& d, const StrongDecomposition& sd);

// Throws DisconnectedInput or ClassViolation when the preconditions fail.
Decomposition decompose_in_semicomplete(const Digraph& d);
Decomposition decompose_out_semicomplete(const Digraph& d);

// Throws DisconnectedInput or ClassViolation when the preconditions fail, and
// TheoremViolation if an odd extended cycle component does not span D.
ALSOutcome classify_arc_locally_semicomplete(const Digraph& d);

struct Verification {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
};

// Re-checks every postcondition of a decomposition from scratch. A Diperfect
// claim is checked by a hole search in U(D) and, when n <= oracle_cap, by the
// brute-force perfection oracle.
Verification verify_decomposition(const Digraph& d, const Decomposition& outcome, int oracle_cap = kDefaultOracleCap);
Verification verify_als_outcome(const Digraph& d, const ALSOutcome& outcome, int oracle_cap = kDefaultOracleCap);

std::string_view outcome_name(const Decomposition& d);
std::string_view outcome_name(const ALSOutcome& d);

}  // namespace arcloc
