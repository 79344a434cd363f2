#pragma once

// Core digraph value type and the basic vocabulary built on it: domination,
// adjacency, induced subdigraphs, the underlying graph, inversion,
// connectivity and distances, and the set relations X -> Y, X => Y, X |-> Y.
//
// Vertices are the integers 0..n-1. A Digraph never contains loops and holds
// at most one arc per ordered pair; both (u,v) and (v,u) together form a digon.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace arcloc {

using Vertex = int;

struct Arc {
    Vertex from;
    Vertex to;

    auto operator<=>(const Arc&) const = default;
};

// Sorted, duplicate-free set of vertex labels.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    // {0, 1, ..., n-1}
    static VertexSet range(int n);

    bool contains(Vertex v) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    Vertex front() const { return members_.front(); }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    const std::vector<Vertex>& members() const { return members_; }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

// Simple undirected graph. Houses U(D) and the inputs of the perfection oracle.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    // Throws std::invalid_argument on a self-edge or an out-of-range endpoint.
    // Each pair is an unordered edge; duplicates collapse.
    UndirectedGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    UndirectedGraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int order() const { return n_; }
    std::size_t edge_count() const;
    bool has_edge(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

    UndirectedGraph complement() const;

    bool operator==(const UndirectedGraph& other) const { return n_ == other.n_ && matrix_ == other.matrix_; }

private:
    void finish();

    int n_ = 0;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::vector<Vertex>> adj_;
};

class Digraph {
public:
    Digraph() = default;
    // Builds the digraph on vertices 0..n-1. Duplicate arcs collapse.
    // Throws std::invalid_argument on a loop, an out-of-range endpoint or n < 0.
    Digraph(int n, std::span<const Arc> arcs);
    Digraph(int n, std::initializer_list<Arc> arcs);

    int order() const { return n_; }
    std::size_t arc_count() const { return arc_count_; }

    // Checked queries; u == v or an out-of-range vertex throws.
    bool dominates(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    // Unchecked fast path for inner loops: false when u == v.
    bool has_arc(Vertex u, Vertex v) const { return matrix_[index(u, v)] != 0; }
    bool linked(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }

    // Arcs in lexicographic order.
    std::vector<Arc> arcs() const;
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool operator==(const Digraph& other) const { return n_ == other.n_ && matrix_ == other.matrix_; }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::size_t arc_count_ = 0;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

// D[S] relabelled to 0..|S|-1; to_original[i] is the label of vertex i in D.
struct InducedSubdigraph {
    Digraph digraph;
    std::vector<Vertex> to_original;

    VertexSet lift(const VertexSet& local) const;
};

UndirectedGraph underlying_graph(const Digraph& d);
Digraph inverse(const Digraph& d);
InducedSubdigraph induced(const Digraph& d, const VertexSet& s);
// D - S
InducedSubdigraph remove_vertices(const Digraph& d, const VertexSet& s);

struct SetRelation {
    bool dominates_all;       // X -> Y
    bool no_back_arc;         // X => Y
    bool strictly_dominates;  // X |-> Y
};

// Throws std::invalid_argument when X and Y intersect or leave the vertex range.
// Empty sides make every flag vacuously true.
SetRelation set_relation(const Digraph& d, const VertexSet& x, const VertexSet& y);

// Connectivity of U(D); the empty digraph is connected.
bool is_connected(const Digraph& d);
bool is_connected(const UndirectedGraph& g);
// Number of arcs on a shortest directed path, nullopt when v is unreachable.
std::optional<int> distance(const Digraph& d, Vertex u, Vertex v);
// Vertices reachable from `from` by directed paths, including `from`.
std::vector<bool> reachable_from(const Digraph& d, Vertex from);

bool is_semicomplete(const Digraph& d);
bool is_stable(const Digraph& d, const VertexSet& s);
// A proper 2-colouring of U(D) (colour 0 or 1 per vertex), or nullopt.
std::optional<std::vector<int>> bipartition(const Digraph& d);
bool is_bipartite(const Digraph& d);
bool is_semicomplete_bipartite(const Digraph& d);

}  // namespace arcloc
