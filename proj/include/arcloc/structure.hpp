#pragma once

// Strong components and their condensation, extended cycles, clique cuts and
// searches for induced odd cycles.
//
// Length conventions: a directed cycle v1..vk v1 has length k (its vertex
// count), while a path has length equal to its number of arcs.

#include <functional>
#include <optional>
#include <vector>

#include "arcloc/digraph.hpp"

namespace arcloc {

class StrongDecomposition {
public:
    explicit StrongDecomposition(const Digraph& d);

    // Components are indexed in a topological order of the condensation:
    // every arc between components goes from a lower to a higher index.
    const std::vector<VertexSet>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    const VertexSet& component(int c) const;
    int component_of(Vertex v) const { return component_of_.at(static_cast<std::size_t>(v)); }
    const Digraph& condensation() const { return condensation_; }

    bool is_trivial(int c) const { return component(c).size() == 1; }
    bool is_strong() const { return components_.size() <= 1; }

    // Components that no outside vertex dominates into.
    std::vector<int> initial_components() const;

    struct ReachSets {
        std::vector<int> reaching;  // components with a path to q, q excluded
        std::vector<int> reached;   // components reachable from q, q excluded
    };
    // Throws std::out_of_range on an invalid component index.
    ReachSets reach_sets(int q) const;

    // Union of the vertex sets of the given components.
    VertexSet vertices_of(const std::vector<int>& comps) const;

private:
    std::vector<VertexSet> components_;
    std::vector<int> component_of_;
    Digraph condensation_;
};

inline StrongDecomposition strong_components(const Digraph& d) { return StrongDecomposition(d); }

// Ordered parts (X1, ..., Xk) with Xi |-> X(i+1 mod k), each part stable and
// no other arcs. Parts are listed starting from the one that holds the
// smallest label and proceed in the direction of domination.
struct ExtendedCycleCertificate {
    std::vector<VertexSet> parts;

    int length() const { return static_cast<int>(parts.size()); }
    VertexSet vertices() const;
    std::vector<int> part_sizes() const;
    // One vertex (the smallest) per part, in cycle order.
    std::vector<Vertex> transversal() const;

    bool operator==(const ExtendedCycleCertificate&) const = default;
};

// True when the parts are disjoint, nonempty, k >= 3, and D restricted to
// their union is exactly the extended cycle C[X1..Xk]. Does not require the
// union to cover V(D).
bool certifies_extended_cycle(const Digraph& d, const ExtendedCycleCertificate& cert);

// Rotates the parts so the one holding the smallest label comes first.
ExtendedCycleCertificate canonical(ExtendedCycleCertificate cert);

// Certificate with k >= 3 parts when D is an extended cycle, else nullopt.
std::optional<ExtendedCycleCertificate> recognize_extended_cycle(const Digraph& d);
// Same, restricted to odd k >= 5.
std::optional<ExtendedCycleCertificate> is_odd_extended_cycle_ge5(const Digraph& d);

struct CliqueCutCertificate {
    VertexSet cut;

    bool operator==(const CliqueCutCertificate&) const = default;
};

// D[B] is semicomplete and D - B is nonempty and disconnected.
// Throws std::invalid_argument when B leaves the vertex range.
bool verify_clique_cut(const Digraph& d, const VertexSet& b);

// An induced directed cycle (no arcs among its vertices besides the cycle
// arcs) with at least `min_length` vertices, restricted to odd lengths when
// `odd_only`. Returned in cycle order starting at its smallest vertex.
std::optional<std::vector<Vertex>> find_induced_directed_cycle(const Digraph& d, int min_length, bool odd_only);

inline std::optional<std::vector<Vertex>> find_induced_odd_directed_cycle_ge5(const Digraph& d) {
    return find_induced_directed_cycle(d, 5, true);
}

// A chordless cycle of U(D) of odd length >= 5 whose induced subdigraph is
// not a directed cycle, in cycle order.
std::optional<std::vector<Vertex>> find_induced_nonoriented_odd_cycle_ge5(const Digraph& d);

// Every chordless cycle of U(D) with at least `min_length` vertices,
// restricted to odd lengths when `odd_only`. Each cycle is reported once, in
// cycle order starting at its smallest vertex. Enumeration stops when `visit`
// returns false.
void for_each_hole(const Digraph& d, int min_length, bool odd_only,
                   const std::function<bool(const std::vector<Vertex>&)>& visit);

// D[cycle] is exactly the directed cycle cycle[0] -> cycle[1] -> ... -> cycle[0]
// or its reverse.
bool is_directed_cycle(const Digraph& d, const std::vector<Vertex>& cycle);

}  // namespace arcloc
